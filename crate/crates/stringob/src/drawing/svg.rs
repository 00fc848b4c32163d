//! Deterministic SVG rendering of drawings.

use crate::geom::Point;

use super::{CrossingVector, Drawing};

pub struct SvgOptions<'a> {
    /// Rendered width in pixels; height follows the aspect ratio.
    pub width: f64,
    /// Label vertices with their ids.
    pub label_vertices: bool,
    /// Mark every crossing point of each pair whose parity is odd.
    pub highlight: Option<&'a CrossingVector>,
}

impl Default for SvgOptions<'_> {
    fn default() -> Self {
        SvgOptions {
            width: 640.0,
            label_vertices: true,
            highlight: None,
        }
    }
}

pub fn export_svg(d: &Drawing, options: &SvgOptions) -> String {
    let mut xs: Vec<f64> = Vec::new();
    let mut ys: Vec<f64> = Vec::new();
    let mut push = |p: &Point| {
        let (x, y) = p.to_f64();
        xs.push(x);
        ys.push(y);
    };
    for p in d.vertex_positions() {
        push(p);
    }
    for path in d.edge_paths() {
        for p in path {
            push(p);
        }
    }
    let (min_x, max_x) = bounds(&xs);
    let (min_y, max_y) = bounds(&ys);
    let span_x = (max_x - min_x).max(1e-9);
    let span_y = (max_y - min_y).max(1e-9);
    let scale = options.width * 0.9 / span_x.max(span_y);
    let margin = options.width * 0.05;
    let w = span_x * scale + 2.0 * margin;
    let h = span_y * scale + 2.0 * margin;
    // Flip y so the drawing appears with the mathematical orientation.
    let tx = |p: &Point| -> (f64, f64) {
        let (x, y) = p.to_f64();
        (
            (x - min_x) * scale + margin,
            (max_y - y) * scale + margin,
        )
    };

    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w:.1}\" height=\"{h:.1}\" viewBox=\"0 0 {w:.1} {h:.1}\">\n"
    ));
    out.push_str("<g fill=\"none\" stroke=\"#333333\" stroke-width=\"1.5\">\n");
    for path in d.edge_paths() {
        let pts: Vec<String> = path
            .iter()
            .map(|p| {
                let (x, y) = tx(p);
                format!("{x:.3},{y:.3}")
            })
            .collect();
        out.push_str(&format!("<polyline points=\"{}\"/>\n", pts.join(" ")));
    }
    out.push_str("</g>\n");

    if let Some(cv) = options.highlight {
        out.push_str("<g class=\"odd-crossings\" fill=\"#cc2222\" stroke=\"none\">\n");
        let pairs = cv.pair_set();
        for i in 0..pairs.len() {
            if !cv.mod2().get(i) {
                continue;
            }
            let (e, f) = pairs.pair(i);
            for p in d.crossing_points(e, f) {
                let (x, y) = tx(&p);
                out.push_str(&format!(
                    "<circle class=\"crossing\" cx=\"{x:.3}\" cy=\"{y:.3}\" r=\"4\"/>\n"
                ));
            }
        }
        out.push_str("</g>\n");
    }

    out.push_str("<g class=\"vertices\" fill=\"#1155cc\" stroke=\"none\">\n");
    for p in d.vertex_positions() {
        let (x, y) = tx(p);
        out.push_str(&format!("<circle cx=\"{x:.3}\" cy=\"{y:.3}\" r=\"3\"/>\n"));
    }
    out.push_str("</g>\n");

    if options.label_vertices {
        out.push_str("<g font-family=\"sans-serif\" font-size=\"11\" fill=\"#000000\">\n");
        for (v, p) in d.vertex_positions().iter().enumerate() {
            let (x, y) = tx(p);
            out.push_str(&format!(
                "<text x=\"{:.3}\" y=\"{:.3}\">{v}</text>\n",
                x + 5.0,
                y - 5.0
            ));
        }
        out.push_str("</g>\n");
    }
    out.push_str("</svg>\n");
    out
}

fn bounds(vals: &[f64]) -> (f64, f64) {
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for &v in vals {
        lo = lo.min(v);
        hi = hi.max(v);
    }
    if vals.is_empty() {
        (0.0, 1.0)
    } else {
        (lo, hi)
    }
}
