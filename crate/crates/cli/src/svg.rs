//! Standalone SVG line plot of `μ1` (solid) and `μ2` (dashed) against `t`.

use std::fmt::Write;

use crate::series_csv::SeriesRow;

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 420.0;
const LEFT: f64 = 60.0;
const RIGHT: f64 = 20.0;
const TOP: f64 = 40.0;
const BOTTOM: f64 = 50.0;

pub fn render(rows: &[SeriesRow], title: &str) -> String {
    let horizon = rows.last().map_or(1, |r| r.t.max(1)) as f64;
    let plot_w = WIDTH - LEFT - RIGHT;
    let plot_h = HEIGHT - TOP - BOTTOM;
    let x = |t: f64| LEFT + t / horizon * plot_w;
    let y = |p: f64| TOP + (1.0 - p.clamp(0.0, 1.0)) * plot_h;

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">"#
    );
    let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(
        s,
        r#"<text x="{}" y="22" text-anchor="middle" font-size="14">{}</text>"#,
        WIDTH / 2.0,
        escape(title)
    );

    // axes and ticks
    let _ = writeln!(
        s,
        r#"<g stroke="black" stroke-width="1"><line x1="{LEFT}" y1="{}" x2="{}" y2="{}"/><line x1="{LEFT}" y1="{TOP}" x2="{LEFT}" y2="{}"/></g>"#,
        TOP + plot_h,
        LEFT + plot_w,
        TOP + plot_h,
        TOP + plot_h
    );
    for i in 0..=5 {
        let p = i as f64 / 5.0;
        let _ = writeln!(
            s,
            r##"<line x1="{LEFT}" y1="{0:.2}" x2="{1:.2}" y2="{0:.2}" stroke="#dddddd"/><text x="{2}" y="{3:.2}" text-anchor="end">{p:.1}</text>"##,
            y(p),
            LEFT + plot_w,
            LEFT - 6.0,
            y(p) + 4.0
        );
    }
    let step = tick_step(horizon);
    let mut t = 0.0;
    while t <= horizon + 1e-9 {
        let _ = writeln!(
            s,
            r#"<line x1="{0:.2}" y1="{1}" x2="{0:.2}" y2="{2}" stroke="black"/><text x="{0:.2}" y="{3}" text-anchor="middle">{t}</text>"#,
            x(t),
            TOP + plot_h,
            TOP + plot_h + 5.0,
            TOP + plot_h + 18.0
        );
        t += step;
    }
    let _ = writeln!(
        s,
        r#"<text x="{}" y="{}" text-anchor="middle">t</text>"#,
        LEFT + plot_w / 2.0,
        HEIGHT - 10.0
    );
    let _ = writeln!(
        s,
        r#"<text x="16" y="{0}" text-anchor="middle" transform="rotate(-90 16 {0})">probability</text>"#,
        TOP + plot_h / 2.0
    );

    let polyline = |values: &mut dyn Iterator<Item = (usize, f64)>| -> String {
        values
            .map(|(t, p)| format!("{:.2},{:.2}", x(t as f64), y(p)))
            .collect::<Vec<_>>()
            .join(" ")
    };
    let mu1 = polyline(&mut rows.iter().map(|r| (r.t, r.mu_h1)));
    let mu2 = polyline(&mut rows.iter().map(|r| (r.t, r.mu_h2)));
    let _ = writeln!(
        s,
        r##"<polyline id="mu_h1" fill="none" stroke="#1f4e9c" stroke-width="1.5" points="{mu1}"/>"##
    );
    let _ = writeln!(
        s,
        r##"<polyline id="mu_h2" fill="none" stroke="#c0392b" stroke-width="1.5" stroke-dasharray="6 4" points="{mu2}"/>"##
    );

    // legend
    let lx = LEFT + plot_w - 120.0;
    let _ = writeln!(
        s,
        r##"<g><line x1="{lx}" y1="{0}" x2="{1}" y2="{0}" stroke="#1f4e9c" stroke-width="1.5"/><text x="{2}" y="{3}">μ_t(H1)</text><line x1="{lx}" y1="{4}" x2="{1}" y2="{4}" stroke="#c0392b" stroke-width="1.5" stroke-dasharray="6 4"/><text x="{2}" y="{5}">μ_t(H2)</text></g>"##,
        TOP + 12.0,
        lx + 30.0,
        lx + 36.0,
        TOP + 16.0,
        TOP + 30.0,
        TOP + 34.0
    );
    s.push_str("</svg>\n");
    s
}

fn tick_step(horizon: f64) -> f64 {
    let raw = horizon / 8.0;
    let magnitude = 10f64.powf(raw.log10().floor());
    let mult = [1.0, 2.0, 5.0, 10.0]
        .into_iter()
        .find(|m| m * magnitude >= raw)
        .unwrap_or(10.0);
    (mult * magnitude).max(1.0)
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}
