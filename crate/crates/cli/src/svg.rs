//! Self-contained SVG step plots: axes, right-continuous step polylines,
//! optional confidence band, optional annotation.

pub struct Series<'a> {
    pub points: &'a [(f64, f64)],
    pub color: &'a str,
    pub dashed: bool,
}

/// Filled region between two polylines (lower, upper).
pub type Band = (Vec<(f64, f64)>, Vec<(f64, f64)>);

pub struct Plot<'a> {
    pub title: &'a str,
    pub x_label: &'a str,
    pub y_label: &'a str,
    pub x_range: (f64, f64),
    pub y_range: (f64, f64),
    pub series: Vec<Series<'a>>,
    pub band: Option<Band>,
    pub annotation: Option<String>,
}

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 500.0;
const MARGIN_LEFT: f64 = 80.0;
const MARGIN_RIGHT: f64 = 24.0;
const MARGIN_TOP: f64 = 42.0;
const MARGIN_BOTTOM: f64 = 60.0;

/// Right-continuous step polyline through `(times, values)`, starting at
/// `(0, y_start)` and extended horizontally to `x_end`. Each event time
/// contributes a horizontal reach and a vertical drop.
pub fn step_points(times: &[f64], values: &[f64], x_end: f64, y_start: f64) -> Vec<(f64, f64)> {
    debug_assert_eq!(times.len(), values.len());
    let mut points = Vec::with_capacity(2 * times.len() + 2);
    let mut y = y_start;
    points.push((0.0, y));
    for (&t, &v) in times.iter().zip(values) {
        points.push((t, y));
        points.push((t, v));
        y = v;
    }
    points.push((x_end, y));
    points
}

fn ticks(range: (f64, f64)) -> Vec<f64> {
    let (lo, hi) = range;
    (0..=5).map(|i| lo + (hi - lo) * i as f64 / 5.0).collect()
}

fn tick_label(v: f64) -> String {
    if v == 0.0 {
        return "0".to_string();
    }
    let magnitude = v.abs();
    let text = if (0.01..10_000.0).contains(&magnitude) {
        format!("{v:.3}")
    } else {
        format!("{v:.2e}")
    };
    if text.contains('.') && !text.contains('e') {
        text.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        text
    }
}

pub fn render(plot: &Plot<'_>) -> String {
    let (x_lo, x_hi) = plot.x_range;
    let (y_lo, y_hi) = plot.y_range;
    let x_span = (x_hi - x_lo).max(f64::MIN_POSITIVE);
    let y_span = (y_hi - y_lo).max(f64::MIN_POSITIVE);
    let map_x = |x: f64| MARGIN_LEFT + (x - x_lo) / x_span * (WIDTH - MARGIN_LEFT - MARGIN_RIGHT);
    let map_y =
        |y: f64| HEIGHT - MARGIN_BOTTOM - (y - y_lo) / y_span * (HEIGHT - MARGIN_TOP - MARGIN_BOTTOM);
    let coords = |pts: &[(f64, f64)]| {
        pts.iter()
            .map(|&(x, y)| format!("{:.2},{:.2}", map_x(x), map_y(y)))
            .collect::<Vec<_>>()
            .join(" ")
    };

    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{WIDTH}\" height=\"{HEIGHT}\" \
         viewBox=\"0 0 {WIDTH} {HEIGHT}\">\n"
    ));
    svg.push_str("<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");
    svg.push_str(&format!(
        "<text x=\"{:.0}\" y=\"24\" font-family=\"sans-serif\" font-size=\"16\" \
         text-anchor=\"middle\">{}</text>\n",
        WIDTH / 2.0,
        plot.title
    ));

    // Axes and ticks.
    let x0 = map_x(x_lo);
    let x1 = map_x(x_hi);
    let y0 = map_y(y_lo);
    let y1 = map_y(y_hi);
    svg.push_str(&format!(
        "<line x1=\"{x0:.2}\" y1=\"{y0:.2}\" x2=\"{x1:.2}\" y2=\"{y0:.2}\" stroke=\"black\"/>\n"
    ));
    svg.push_str(&format!(
        "<line x1=\"{x0:.2}\" y1=\"{y0:.2}\" x2=\"{x0:.2}\" y2=\"{y1:.2}\" stroke=\"black\"/>\n"
    ));
    for tick in ticks(plot.x_range) {
        let x = map_x(tick);
        svg.push_str(&format!(
            "<line x1=\"{x:.2}\" y1=\"{y0:.2}\" x2=\"{x:.2}\" y2=\"{:.2}\" stroke=\"black\"/>\n",
            y0 + 5.0
        ));
        svg.push_str(&format!(
            "<text x=\"{x:.2}\" y=\"{:.2}\" font-family=\"sans-serif\" font-size=\"12\" \
             text-anchor=\"middle\">{}</text>\n",
            y0 + 20.0,
            tick_label(tick)
        ));
    }
    for tick in ticks(plot.y_range) {
        let y = map_y(tick);
        svg.push_str(&format!(
            "<line x1=\"{:.2}\" y1=\"{y:.2}\" x2=\"{x0:.2}\" y2=\"{y:.2}\" stroke=\"black\"/>\n",
            x0 - 5.0
        ));
        svg.push_str(&format!(
            "<text x=\"{:.2}\" y=\"{:.2}\" font-family=\"sans-serif\" font-size=\"12\" \
             text-anchor=\"end\">{}</text>\n",
            x0 - 8.0,
            y + 4.0,
            tick_label(tick)
        ));
    }
    svg.push_str(&format!(
        "<text x=\"{:.0}\" y=\"{:.0}\" font-family=\"sans-serif\" font-size=\"13\" \
         text-anchor=\"middle\">{}</text>\n",
        (x0 + x1) / 2.0,
        HEIGHT - 14.0,
        plot.x_label
    ));
    svg.push_str(&format!(
        "<text x=\"20\" y=\"{:.0}\" font-family=\"sans-serif\" font-size=\"13\" \
         text-anchor=\"middle\" transform=\"rotate(-90 20 {:.0})\">{}</text>\n",
        (y0 + y1) / 2.0,
        (y0 + y1) / 2.0,
        plot.y_label
    ));

    if let Some((lower, upper)) = &plot.band {
        if !lower.is_empty() {
            let mut polygon = lower.clone();
            polygon.extend(upper.iter().rev());
            svg.push_str(&format!(
                "<polygon points=\"{}\" fill=\"#4878cf\" fill-opacity=\"0.2\" stroke=\"none\"/>\n",
                coords(&polygon)
            ));
            for boundary in [lower, upper] {
                svg.push_str(&format!(
                    "<polyline points=\"{}\" fill=\"none\" stroke=\"#4878cf\" \
                     stroke-width=\"1\" stroke-dasharray=\"5,3\"/>\n",
                    coords(boundary)
                ));
            }
        }
    }

    for series in &plot.series {
        let dash = if series.dashed {
            " stroke-dasharray=\"5,3\""
        } else {
            ""
        };
        svg.push_str(&format!(
            "<polyline points=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"1.8\"{dash}/>\n",
            coords(series.points),
            series.color
        ));
    }

    if let Some(annotation) = &plot.annotation {
        svg.push_str(&format!(
            "<text x=\"{:.2}\" y=\"{:.2}\" font-family=\"sans-serif\" font-size=\"12\" \
             fill=\"#a0321e\" text-anchor=\"end\">{}</text>\n",
            x1,
            y1 + 16.0,
            annotation
        ));
    }

    svg.push_str("</svg>\n");
    svg
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn step_geometry_of_the_worked_example() {
        // Two steps: 1 -> 0.75 at t=1 and 0.75 -> 0.375 at t=3.
        let points = step_points(&[1.0, 3.0], &[0.75, 0.375], 4.0, 1.0);
        assert_eq!(
            points,
            vec![
                (0.0, 1.0),
                (1.0, 1.0),
                (1.0, 0.75),
                (3.0, 0.75),
                (3.0, 0.375),
                (4.0, 0.375),
            ]
        );
        // Exactly two vertical drops.
        let drops = points
            .windows(2)
            .filter(|w| w[0].0 == w[1].0 && w[0].1 != w[1].1)
            .count();
        assert_eq!(drops, 2);
    }

    #[test]
    fn empty_series_is_a_flat_line() {
        let points = step_points(&[], &[], 1.0, 1.0);
        assert_eq!(points, vec![(0.0, 1.0), (1.0, 1.0)]);
    }

    #[test]
    fn render_produces_wellformed_svg() {
        let series_points = step_points(&[1.0, 3.0], &[0.75, 0.375], 4.0, 1.0);
        let plot = Plot {
            title: "survival",
            x_label: "time",
            y_label: "S(t)",
            x_range: (0.0, 4.0),
            y_range: (0.0, 1.05),
            series: vec![Series { points: &series_points, color: "#1b6ca8", dashed: false }],
            band: None,
            annotation: Some("undefined beyond t=3".to_string()),
        };
        let svg = render(&plot);
        assert!(svg.starts_with("<svg"));
        assert!(svg.ends_with("</svg>\n"));
        assert!(svg.contains("polyline"));
        assert!(svg.contains("undefined beyond t=3"));
    }
}
