//! Minimal SVG line charts of summary rows: `n` on the x axis, mean
//! evaluations on the y axis, one polyline per variant.

use std::fmt::Write;

use crate::lab::SummaryRow;

const WIDTH: f64 = 720.0;
const HEIGHT: f64 = 460.0;
const LEFT: f64 = 90.0;
const RIGHT: f64 = 200.0;
const TOP: f64 = 40.0;
const BOTTOM: f64 = 60.0;
const COLORS: [&str; 8] = [
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf",
];

struct Series<'a> {
    label: String,
    points: Vec<&'a SummaryRow>,
}

/// Renders the chart, or explains why the rows cannot be plotted.
pub fn render_svg(rows: &[SummaryRow], log_y: bool) -> Result<String, String> {
    if rows.is_empty() {
        return Err("summary has no rows to plot".into());
    }
    if let Some(bad) = rows.iter().find(|r| !r.mean_evals.is_finite()) {
        return Err(format!(
            "non-finite mean for {} at n = {}",
            bad.variant, bad.n
        ));
    }
    if log_y {
        if let Some(bad) = rows.iter().find(|r| r.mean_evals <= 0.0) {
            return Err(format!(
                "log-scale y axis cannot show mean {} ({} at n = {})",
                bad.mean_evals, bad.variant, bad.n
            ));
        }
    }

    let multi_problem = rows.iter().any(|r| r.problem != rows[0].problem);
    let mut series: Vec<Series> = Vec::new();
    for r in rows {
        let label = if multi_problem {
            format!("{}: {}", r.problem, r.variant)
        } else {
            r.variant.clone()
        };
        match series.iter_mut().find(|s| s.label == label) {
            Some(s) => s.points.push(r),
            None => series.push(Series {
                label,
                points: vec![r],
            }),
        }
    }
    for s in &mut series {
        s.points.sort_by_key(|r| r.n);
    }

    let ty = |v: f64| if log_y { v.log10() } else { v };
    let (mut x_lo, mut x_hi) = min_max(rows.iter().map(|r| r.n as f64));
    let (mut y_lo, mut y_hi) = min_max(rows.iter().map(|r| ty(r.mean_evals)));
    if !log_y {
        y_lo = y_lo.min(0.0);
    }
    if x_hi - x_lo < 1e-12 {
        x_lo -= 1.0;
        x_hi += 1.0;
    }
    if y_hi - y_lo < 1e-12 {
        y_lo -= 1.0;
        y_hi += 1.0;
    }
    let plot_w = WIDTH - LEFT - RIGHT;
    let plot_h = HEIGHT - TOP - BOTTOM;
    let px = |x: f64| LEFT + (x - x_lo) / (x_hi - x_lo) * plot_w;
    let py = |y: f64| TOP + plot_h - (y - y_lo) / (y_hi - y_lo) * plot_h;

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">"#
    );
    let _ = writeln!(
        svg,
        r#"<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#
    );
    let title = if multi_problem {
        "mean fitness evaluations".to_owned()
    } else {
        format!("{}: mean fitness evaluations", rows[0].problem)
    };
    let _ = writeln!(
        svg,
        r#"<text x="{}" y="24" text-anchor="middle" font-size="14">{}</text>"#,
        LEFT + plot_w / 2.0,
        escape(&title)
    );

    // axes
    let (x0, y0, x1, y1) = (LEFT, TOP + plot_h, LEFT + plot_w, TOP);
    let _ = writeln!(
        svg,
        r#"<path class="axes" d="M{x0} {y1} L{x0} {y0} L{x1} {y0}" stroke="black" fill="none"/>"#
    );
    let mut ns: Vec<usize> = rows.iter().map(|r| r.n).collect();
    ns.sort_unstable();
    ns.dedup();
    for n in ns {
        let x = px(n as f64);
        let _ = writeln!(
            svg,
            r#"<text class="xtick" x="{x:.2}" y="{:.2}" text-anchor="middle">{n}</text>"#,
            y0 + 18.0
        );
    }
    for (value, label) in y_ticks(y_lo, y_hi, log_y) {
        let y = py(value);
        let _ = writeln!(
            svg,
            r#"<text class="ytick" x="{:.2}" y="{:.2}" text-anchor="end">{label}</text>"#,
            x0 - 6.0,
            y + 4.0
        );
        let _ = writeln!(
            svg,
            r##"<path class="grid" d="M{x0} {y:.2} L{x1} {y:.2}" stroke="#dddddd" fill="none"/>"##
        );
    }
    let _ = writeln!(
        svg,
        r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">n</text>"#,
        LEFT + plot_w / 2.0,
        HEIGHT - 16.0
    );
    let _ = writeln!(
        svg,
        r#"<text x="18" y="{:.2}" text-anchor="middle" transform="rotate(-90 18 {:.2})">{}</text>"#,
        TOP + plot_h / 2.0,
        TOP + plot_h / 2.0,
        if log_y {
            "evaluations (log10)"
        } else {
            "evaluations"
        }
    );

    for (i, s) in series.iter().enumerate() {
        let color = COLORS[i % COLORS.len()];
        let pts: Vec<String> = s
            .points
            .iter()
            .map(|r| format!("{:.2},{:.2}", px(r.n as f64), py(ty(r.mean_evals))))
            .collect();
        let _ = writeln!(
            svg,
            r#"<polyline class="series" points="{}" stroke="{color}" stroke-width="2" fill="none"/>"#,
            pts.join(" ")
        );
        for r in &s.points {
            let _ = writeln!(
                svg,
                r#"<circle class="marker" cx="{:.2}" cy="{:.2}" r="3.5" fill="{color}"><title>{} n={} mean={}</title></circle>"#,
                px(r.n as f64),
                py(ty(r.mean_evals)),
                escape(&s.label),
                r.n,
                r.mean_evals
            );
        }
        let ly = TOP + 10.0 + 20.0 * i as f64;
        let lx = WIDTH - RIGHT + 15.0;
        let _ = writeln!(
            svg,
            r#"<rect x="{lx}" y="{:.2}" width="14" height="4" fill="{color}"/>"#,
            ly - 2.0
        );
        let _ = writeln!(
            svg,
            r#"<text class="legend" x="{}" y="{:.2}">{}</text>"#,
            lx + 20.0,
            ly + 4.0,
            escape(&s.label)
        );
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}

fn min_max(values: impl Iterator<Item = f64>) -> (f64, f64) {
    values.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| {
        (lo.min(v), hi.max(v))
    })
}

fn y_ticks(lo: f64, hi: f64, log_y: bool) -> Vec<(f64, String)> {
    if log_y {
        let (a, b) = (lo.floor() as i32, hi.ceil() as i32);
        return (a..=b)
            .map(f64::from)
            .filter(|d| (lo..=hi).contains(d))
            .map(|d| (d, format!("1e{d}")))
            .collect();
    }
    (0..=4)
        .map(|i| {
            let v = lo + (hi - lo) * i as f64 / 4.0;
            (v, format!("{v:.0}"))
        })
        .collect()
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}
