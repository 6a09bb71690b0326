//! Deterministic CSV and SVG emitters.

use std::fmt::Write as _;

use p3crank::cranks::{c_ls, CycleDecomposition, RectanglePlan};
use p3crank::ehrhart::{fundamental_points, FundamentalPoint, TileGroup};
use p3crank::partitions::Partition3;

use crate::CliError;

pub const CYCLE_COLUMNS: [&str; 6] = ["cycle_index", "position", "lambda1", "lambda2", "lambda3", "crank"];

fn csv_string(rows: impl FnOnce(&mut csv::Writer<Vec<u8>>) -> Result<(), csv::Error>) -> Result<String, CliError> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::CRLF).from_writer(Vec::new());
    rows(&mut w)?;
    let bytes = w.into_inner().map_err(|e| CliError::Input(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CliError::Input(e.to_string()))
}

/// One row per partition, cycles in decomposition order.
pub fn cycles_csv(d: &CycleDecomposition) -> Result<String, CliError> {
    csv_string(|w| {
        w.write_record(CYCLE_COLUMNS)?;
        for (i, cycle) in d.cycles.iter().enumerate() {
            for (pos, lambda) in cycle.iter().enumerate() {
                let [a, b, c] = lambda.parts();
                w.write_record([i as u64, pos as u64, a, b, c, c_ls(lambda, d.m)].map(|v| v.to_string()))?;
            }
        }
        Ok(())
    })
}

/// Cell-to-partition mapping in row-major order, with the plan's crank value.
pub fn rectangle_csv(plan: &RectanglePlan, width: i64, grid: &[Partition3]) -> Result<String, CliError> {
    csv_string(|w| {
        w.write_record(["x", "y", "lambda1", "lambda2", "lambda3", "crank"])?;
        for (i, lambda) in grid.iter().enumerate() {
            let (x, y) = (i as i64 % width, i as i64 / width);
            let [a, b, c] = lambda.parts();
            let crank = plan.eta.apply([x, y], plan.modulus());
            w.write_record([x.to_string(), y.to_string(), a.to_string(), b.to_string(), c.to_string(), crank.to_string()])?;
        }
        Ok(())
    })
}

/// Fixed colour per box remainder, spread around the hue circle.
pub fn remainder_color(mu: &FundamentalPoint) -> String {
    let idx = fundamental_points().iter().position(|p| p == mu).unwrap_or(0);
    let hue = (idx * 97 % 36) as f64 * 10.0;
    let light = if idx % 2 == 0 { 0.45 } else { 0.62 };
    let (r, g, b) = hsl_to_rgb(hue, 0.65, light);
    format!("#{r:02x}{g:02x}{b:02x}")
}

fn hsl_to_rgb(h: f64, s: f64, l: f64) -> (u8, u8, u8) {
    let c = (1.0 - (2.0 * l - 1.0).abs()) * s;
    let hp = h / 60.0;
    let x = c * (1.0 - (hp % 2.0 - 1.0).abs());
    let (r, g, b) = match hp as u32 {
        0 => (c, x, 0.0),
        1 => (x, c, 0.0),
        2 => (0.0, c, x),
        3 => (0.0, x, c),
        4 => (x, 0.0, c),
        _ => (c, 0.0, x),
    };
    let m = l - c / 2.0;
    let to = |v: f64| ((v + m) * 255.0).round() as u8;
    (to(r), to(g), to(b))
}

const CELL: i64 = 18;
const MARGIN: i64 = 30;
const LEGEND_WIDTH: i64 = 230;
const LEGEND_LINE: i64 = 16;

/// Points at `(λ₂−λ₃, λ₃)`, coloured by box remainder, with a legend of groups.
pub fn tile_svg(n: u64, groups: &[TileGroup]) -> String {
    let max_x = groups
        .iter()
        .flat_map(|g| &g.members)
        .map(|l| (l.middle() - l.smallest()) as i64)
        .max()
        .unwrap_or(0);
    let max_y = (n / 3) as i64;
    let plot_w = (max_x + 1) * CELL;
    let plot_h = max_y * CELL;
    let legend_h = groups.len() as i64 * LEGEND_LINE + 2 * LEGEND_LINE;
    let width = 2 * MARGIN + plot_w + LEGEND_WIDTH;
    let height = 2 * MARGIN + plot_h.max(legend_h);
    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(s, "<title>P({n},3) by box remainder</title>");
    let _ = writeln!(s, r#"<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>"#);
    let _ = writeln!(s, r#"<g id="points" stroke="black" stroke-width="0.5">"#);
    for g in groups {
        let color = remainder_color(&g.remainder);
        for l in &g.members {
            let x = (l.middle() - l.smallest()) as i64;
            let y = l.smallest() as i64;
            let cx = MARGIN + x * CELL + CELL / 2;
            let cy = MARGIN + (max_y - y) * CELL + CELL / 2;
            let _ = writeln!(
                s,
                r#"<circle cx="{cx}" cy="{cy}" r="{}" fill="{color}"><title>{l}</title></circle>"#,
                CELL / 3
            );
        }
    }
    let _ = writeln!(s, "</g>");
    let lx = MARGIN + plot_w + MARGIN / 2;
    let _ = writeln!(s, r#"<g id="legend" font-family="monospace" font-size="12">"#);
    let _ = writeln!(s, r#"<text x="{lx}" y="{}">remainder  triangle  size</text>"#, MARGIN);
    for (i, g) in groups.iter().enumerate() {
        let y = MARGIN + (i as i64 + 1) * LEGEND_LINE;
        let color = remainder_color(&g.remainder);
        let _ = writeln!(s, r#"<rect x="{lx}" y="{}" width="10" height="10" fill="{color}"/>"#, y - 9);
        let _ = writeln!(
            s,
            r#"<text x="{}" y="{y}">{:<10} T_{:<7} {}</text>"#,
            lx + 16,
            g.remainder.to_string(),
            g.triangle,
            g.members.len()
        );
    }
    let _ = writeln!(s, "</g>");
    let _ = writeln!(s, "</svg>");
    s
}
