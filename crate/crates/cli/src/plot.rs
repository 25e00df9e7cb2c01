//! Standalone SVG plot of one motif: member subsequences overlaid in
//! original sensor units, with the centroid drawn on top.

use std::collections::HashMap;
use std::fmt::Write;

use coinmotif::catalog::MotifRecord;
use coinmotif::{znormalize, TimeSeries};

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 360.0;
const MARGIN_LEFT: f64 = 64.0;
const MARGIN_RIGHT: f64 = 16.0;
const MARGIN_TOP: f64 = 32.0;
const MARGIN_BOTTOM: f64 = 48.0;
const TICKS: usize = 5;

struct Scale {
    lo: f64,
    hi: f64,
    from: f64,
    to: f64,
}

impl Scale {
    fn map(&self, v: f64) -> f64 {
        let span = if self.hi > self.lo { self.hi - self.lo } else { 1.0 };
        self.from + (v - self.lo) / span * (self.to - self.from)
    }
}

fn polyline(points: impl Iterator<Item = (f64, f64)>) -> String {
    points.map(|(x, y)| format!("{x:.2},{y:.2}")).collect::<Vec<_>>().join(" ")
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

/// Renders `motif` of `sensor`. `runs` maps run ids to the original series;
/// members whose run is missing are left out.
pub fn motif_svg(sensor: &str, motif: &MotifRecord, window: usize, runs: &HashMap<&str, &TimeSeries>) -> String {
    let mut members = Vec::new();
    let mut stats = Vec::new();
    for m in &motif.members {
        let Some(series) = runs.get(m.run.as_str()) else { continue };
        let Some(values) = series.values.get(m.start..m.start + window) else { continue };
        if let Ok(z) = znormalize(series) {
            stats.push((z.mean, z.std_dev));
        }
        members.push((m, values));
    }
    let (mean, sd) = if stats.is_empty() {
        (0.0, 1.0)
    } else {
        let n = stats.len() as f64;
        (stats.iter().map(|s| s.0).sum::<f64>() / n, stats.iter().map(|s| s.1).sum::<f64>() / n)
    };
    let d = motif.centroid.len().max(1);
    let centroid: Vec<f64> = (0..window)
        .map(|j| {
            let seg = (j * d / window).min(d - 1);
            (motif.centroid.get(seg).copied().unwrap_or(0.0) + motif.level.mean) * sd + mean
        })
        .collect();

    let all = members.iter().flat_map(|(_, v)| v.iter()).chain(&centroid);
    let (lo, hi) = all.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &v| (lo.min(v), hi.max(v)));
    let (lo, hi) = if lo.is_finite() { (lo, hi) } else { (0.0, 1.0) };
    let xs = Scale {
        lo: 0.0,
        hi: (window - 1) as f64,
        from: MARGIN_LEFT,
        to: WIDTH - MARGIN_RIGHT,
    };
    let ys = Scale {
        lo,
        hi,
        from: HEIGHT - MARGIN_BOTTOM,
        to: MARGIN_TOP,
    };

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" data-sensor="{}" data-motif="{}">"#,
        escape(sensor),
        motif.id
    );
    let _ = writeln!(
        svg,
        r#"<text x="{}" y="20" font-family="sans-serif" font-size="14" text-anchor="middle">{} motif {} (support {}, level {:.3})</text>"#,
        WIDTH / 2.0,
        escape(sensor),
        motif.id,
        motif.support,
        motif.level.mean
    );
    let (x0, x1, y0, y1) = (MARGIN_LEFT, WIDTH - MARGIN_RIGHT, HEIGHT - MARGIN_BOTTOM, MARGIN_TOP);
    let _ = writeln!(svg, r#"<g class="axes" stroke="black" font-family="sans-serif" font-size="11">"#);
    let _ = writeln!(svg, r#"<line x1="{x0}" y1="{y0}" x2="{x1}" y2="{y0}"/><line x1="{x0}" y1="{y0}" x2="{x0}" y2="{y1}"/>"#);
    for k in 0..TICKS {
        let f = k as f64 / (TICKS - 1) as f64;
        let xv = f * (window - 1) as f64;
        let yv = lo + f * (hi - lo);
        let (xp, yp) = (xs.map(xv), ys.map(yv));
        let _ = writeln!(
            svg,
            r#"<line x1="{xp:.2}" y1="{y0}" x2="{xp:.2}" y2="{}"/><text x="{xp:.2}" y="{}" text-anchor="middle" stroke="none">{xv:.0}</text>"#,
            y0 + 4.0,
            y0 + 16.0
        );
        let _ = writeln!(
            svg,
            r#"<line x1="{}" y1="{yp:.2}" x2="{x0}" y2="{yp:.2}"/><text x="{}" y="{:.2}" text-anchor="end" stroke="none">{yv:.3}</text>"#,
            x0 - 4.0,
            x0 - 6.0,
            yp + 4.0
        );
    }
    let _ = writeln!(
        svg,
        r#"<text x="{}" y="{}" text-anchor="middle" stroke="none">sample index</text>"#,
        (x0 + x1) / 2.0,
        HEIGHT - 8.0
    );
    let _ = writeln!(
        svg,
        r#"<text x="14" y="{:.2}" text-anchor="middle" stroke="none" transform="rotate(-90 14 {:.2})">{}</text>"#,
        (y0 + y1) / 2.0,
        (y0 + y1) / 2.0,
        escape(sensor)
    );
    let _ = writeln!(svg, "</g>");
    let _ = writeln!(svg, r#"<g class="members" fill="none" stroke="steelblue" stroke-opacity="0.35">"#);
    for (m, values) in &members {
        let _ = writeln!(
            svg,
            r#"<polyline data-run="{}" data-start="{}" points="{}"/>"#,
            escape(&m.run),
            m.start,
            polyline(values.iter().enumerate().map(|(j, &v)| (xs.map(j as f64), ys.map(v))))
        );
    }
    let _ = writeln!(svg, "</g>");
    let _ = writeln!(
        svg,
        r#"<polyline class="centroid" fill="none" stroke="crimson" stroke-width="2" points="{}"/>"#,
        polyline(centroid.iter().enumerate().map(|(j, &v)| (xs.map(j as f64), ys.map(v))))
    );
    svg.push_str("</svg>\n");
    svg
}

/// File name for a motif plot: sensor name reduced to safe characters.
pub fn plot_file_name(sensor: &str, motif: usize) -> String {
    let safe: String = sensor
        .chars()
        .map(|c| if c.is_ascii_alphanumeric() || c == '-' || c == '_' { c } else { '_' })
        .collect();
    format!("{safe}_motif{motif:03}.svg")
}

#[cfg(test)]
mod tests {
    use super::*;
    use coinmotif::catalog::MemberRecord;
    use coinmotif::extract::LevelStats;

    #[test]
    fn members_carry_run_and_start() {
        let s = TimeSeries::new("run-a", "speed", (0..40).map(|i| (i as f64 * 0.5).sin()).collect()).unwrap();
        let runs: HashMap<&str, &TimeSeries> = [("run-a", &s)].into_iter().collect();
        let m = MotifRecord {
            id: 2,
            group_motif: 0,
            support: 2,
            centroid: vec![-1.0, 1.0],
            level: LevelStats { mean: 0.0, min: 0.0, max: 0.0 },
            members: vec![
                MemberRecord { run: "run-a".into(), start: 3, level: 0.0 },
                MemberRecord { run: "run-a".into(), start: 20, level: 0.0 },
                MemberRecord { run: "other".into(), start: 1, level: 0.0 },
            ],
        };
        let svg = motif_svg("speed", &m, 8, &runs);
        assert!(svg.starts_with("<svg"));
        assert!(svg.contains(r#"data-run="run-a" data-start="3""#));
        assert!(svg.contains(r#"data-run="run-a" data-start="20""#));
        assert!(!svg.contains("other"));
        assert!(svg.contains("sample index"));
        assert_eq!(svg.matches("<polyline").count(), 3);
    }

    #[test]
    fn file_names_are_safe() {
        assert_eq!(plot_file_name("coolant temp/°C", 4), "coolant_temp__C_motif004.svg");
    }
}
