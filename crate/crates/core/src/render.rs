//! SVG pictures of two-variable staircases with their partitions.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::monomial::{format_monomial, MonomialIdeal};
use crate::perm::Permutation;
use crate::staircase::Staircase;

const CELL: u32 = 40;
const MARGIN: u32 = 40;
const GAP: u32 = 40;
const PALETTE: [&str; 8] = [
    "#4e79a7", "#f28e2b", "#59a14f", "#e15759", "#76b7b2", "#edc948", "#b07aa1", "#9c755f",
];

/// One panel per permutation, left to right. Each staircase cell is filled
/// with the color of its partition piece. The `<metadata>` element holds
/// JSON `{"panels":[{"sigma":[..],"slices":[{"corner":[..],"area":k}]}]}`
/// whose areas (in cells) equal the partition volumes.
pub fn render_svg(ideal: &MonomialIdeal, sigmas: &[Permutation]) -> Result<String> {
    if ideal.dim() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            found: ideal.dim(),
        });
    }
    let staircase = Staircase::new(ideal)?;
    let bbox = staircase.bounding_box();
    let (w, h) = (bbox[0], bbox[1]);
    let panel_w = w * CELL;
    let panel_h = h * CELL;
    let count = sigmas.len().max(1) as u32;
    let width = 2 * MARGIN + count * panel_w + (count - 1) * GAP;
    let height = 2 * MARGIN + panel_h + 20;

    let mut body = String::new();
    let mut meta_panels = Vec::new();
    for (p, sigma) in sigmas.iter().enumerate() {
        let partition = staircase.partition(sigma)?;
        let x0 = MARGIN + p as u32 * (panel_w + GAP);
        let y0 = MARGIN + 20;
        let _ = writeln!(
            body,
            r#"  <g id="sigma-{}"><text x="{}" y="{}" font-family="sans-serif" font-size="14">sigma = {}</text>"#,
            sigma
                .one_based()
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join("-"),
            x0,
            MARGIN,
            sigma
        );
        let mut slices = Vec::new();
        for (i, part) in partition.parts.iter().enumerate() {
            let color = PALETTE[i % PALETTE.len()];
            for cell in part.cells.iter() {
                let x = x0 + cell[0] * CELL;
                let y = y0 + (h - 1 - cell[1]) * CELL;
                let _ = writeln!(
                    body,
                    r##"    <rect x="{x}" y="{y}" width="{CELL}" height="{CELL}" fill="{color}" stroke="#ffffff" stroke-width="1"/>"##
                );
            }
            let cx = x0 + part.corner[0] * CELL;
            let cy = y0 + (h - part.corner[1]) * CELL;
            let _ = writeln!(
                body,
                r##"    <circle cx="{cx}" cy="{cy}" r="4" fill="#000000"><title>{}</title></circle>"##,
                part.corner
            );
            slices.push(serde_json::json!({"corner": part.corner, "area": part.volume()}));
        }
        for g in staircase.inner_corners() {
            let gx = x0 + g[0] * CELL;
            let gy = y0 + (h - g[1]) * CELL;
            let _ = writeln!(
                body,
                r##"    <circle cx="{gx}" cy="{gy}" r="3" fill="#ffffff" stroke="#000000"><title>{}</title></circle>"##,
                format_monomial(g)
            );
        }
        let _ = writeln!(
            body,
            r##"    <rect x="{x0}" y="{y0}" width="{panel_w}" height="{panel_h}" fill="none" stroke="#888888"/>"##
        );
        body.push_str("  </g>\n");
        meta_panels.push(serde_json::json!({"sigma": sigma, "slices": slices}));
    }
    let meta = serde_json::json!({ "ideal": ideal.to_string(), "panels": meta_panels });

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(svg, "  <metadata>{}</metadata>", escape(&meta.to_string()));
    svg.push_str(&body);
    svg.push_str("</svg>\n");
    Ok(svg)
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}
