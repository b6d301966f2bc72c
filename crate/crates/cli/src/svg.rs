//! SVG drawings of the slice of a fan by an affine hyperplane `<a, x> = c`.
//!
//! Each maximal cone meeting the hyperplane becomes a cell (`<g class="cell">`)
//! holding the edges of its slice polytope; each ray meeting the hyperplane in
//! a point is drawn as a labeled dot (`<g class="ray">`). Coordinates are
//! exact until emission: points are written in an orthogonal basis of the
//! hyperplane and, for rank 4, the 3-dimensional slice is rotated by a fixed
//! rotation and projected orthographically onto the plane.

use std::fmt::Write;

use num_traits::{ToPrimitive, Zero};
use quotfan::{Fan, Halfspace, Polyhedron, Rat, RatMatrix, RatVector};

use crate::{CliError, CliResult};

struct Cell {
    cone: Vec<usize>,
    vertices: Vec<RatVector>,
    edges: Vec<(usize, usize)>,
}

fn edges(p: &Polyhedron) -> Vec<(usize, usize)> {
    let tight: Vec<Vec<usize>> = p
        .vertices()
        .iter()
        .map(|v| {
            p.inequalities()
                .iter()
                .enumerate()
                .filter(|(_, h)| h.normal.dot(v) == h.offset)
                .map(|(i, _)| i)
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    for a in 0..tight.len() {
        for b in a + 1..tight.len() {
            let common: Vec<usize> = tight[a].iter().copied().filter(|i| tight[b].contains(i)).collect();
            let on_face = tight.iter().filter(|t| common.iter().all(|i| t.contains(i))).count();
            if on_face == 2 {
                out.push((a, b));
            }
        }
    }
    out
}

fn slice_cells(fan: &Fan, hyperplane: &Halfspace) -> CliResult<Vec<Cell>> {
    let n = fan.ambient_dim();
    let mut cells = Vec::new();
    for (cone, indices) in fan.maximal_cones().iter().zip(fan.maximal_cone_indices()) {
        let ineqs: Vec<Halfspace> = cone
            .facets()
            .iter()
            .map(|f| Halfspace {
                normal: f.clone(),
                offset: Rat::zero(),
            })
            .collect();
        let mut eqs: Vec<Halfspace> = cone
            .equations()
            .iter()
            .map(|e| Halfspace {
                normal: e.clone(),
                offset: Rat::zero(),
            })
            .collect();
        eqs.push(hyperplane.clone());
        let p = Polyhedron::from_inequalities(n, &ineqs, &eqs)?;
        if p.is_empty() {
            continue;
        }
        if !p.is_bounded() {
            return Err(CliError::Invalid(format!("the slice of cone {cone} is unbounded")));
        }
        cells.push(Cell {
            cone: indices.clone(),
            edges: edges(&p),
            vertices: p.vertices().to_vec(),
        });
    }
    Ok(cells)
}

fn ray_label(r: &RatVector) -> String {
    let nonzero: Vec<usize> = (0..r.len()).filter(|&i| !r[i].is_zero()).collect();
    if nonzero.len() == 1 && r[nonzero[0]] == Rat::from_integer(1.into()) {
        return format!("e{}", nonzero[0] + 1);
    }
    let parts: Vec<String> = r.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(","))
}

/// Exact coordinates in an orthogonal basis of the hyperplane direction, with
/// the squared basis lengths needed to make them metric.
struct Chart {
    origin: RatVector,
    basis: Vec<RatVector>,
    norms: Vec<f64>,
}

impl Chart {
    fn new(normal: &RatVector, level: &Rat) -> Chart {
        let origin = normal.scale(&(level / normal.dot(normal)));
        let row = RatMatrix::from_rows(normal.len(), std::slice::from_ref(normal)).expect("one row");
        let mut basis: Vec<RatVector> = Vec::new();
        for k in row.kernel() {
            let mut v = k;
            for b in &basis {
                let c = v.dot(b) / b.dot(b);
                v = &v - &b.scale(&c);
            }
            basis.push(v);
        }
        let norms = basis
            .iter()
            .map(|b| b.dot(b).to_f64().unwrap_or(f64::NAN).sqrt())
            .collect();
        Chart { origin, basis, norms }
    }

    fn place(&self, x: &RatVector) -> [f64; 2] {
        let d = x - &self.origin;
        let c: Vec<f64> = self
            .basis
            .iter()
            .zip(&self.norms)
            .map(|(b, norm)| (d.dot(b) / b.dot(b)).to_f64().unwrap_or(f64::NAN) * norm)
            .collect();
        match c.len() {
            1 => [c[0], 0.0],
            2 => [c[0], c[1]],
            _ => project(c[0], c[1], c[2]),
        }
    }
}

/// Rotation by `atan(4/3)` about the z-axis, then by `atan(5/12)` about the
/// x-axis, then orthographic projection to the xy-plane.
fn project(x: f64, y: f64, z: f64) -> [f64; 2] {
    let (c1, s1) = (3.0 / 5.0, 4.0 / 5.0);
    let (c2, s2) = (12.0 / 13.0, 5.0 / 13.0);
    let x1 = c1 * x - s1 * y;
    let y1 = s1 * x + c1 * y;
    [x1, c2 * y1 - s2 * z]
}

fn num(v: f64) -> String {
    let v = if v.abs() < 5e-7 { 0.0 } else { v };
    format!("{v:.6}")
}

/// Renders the slice of `fan` by `<normal, x> = level` as a standalone SVG
/// document. The fan must have rank 2, 3 or 4 and every nonempty slice of a
/// maximal cone must be bounded.
pub fn svg_slice(fan: &Fan, normal: &[i64], level: &Rat) -> CliResult<String> {
    let n = fan.ambient_dim();
    if !(2..=4).contains(&n) {
        return Err(CliError::Invalid(format!(
            "slices are drawn for rank 2, 3 or 4, not {n}"
        )));
    }
    if normal.len() != n {
        return Err(CliError::Invalid(format!(
            "normal vector has length {}, the fan has rank {n}",
            normal.len()
        )));
    }
    let normal = RatVector::from_ints(normal);
    if normal.is_zero() {
        return Err(CliError::Invalid("the normal vector is zero".into()));
    }
    let hyperplane = Halfspace {
        normal: normal.clone(),
        offset: level.clone(),
    };
    let cells = slice_cells(fan, &hyperplane)?;
    if cells.is_empty() {
        return Err(CliError::Invalid("the hyperplane misses the support of the fan".into()));
    }
    let mut points: Vec<(usize, RatVector)> = Vec::new();
    if !level.is_zero() {
        for (i, r) in fan.rays().iter().enumerate() {
            let h = normal.dot(r);
            if h.is_zero() {
                continue;
            }
            let t = level / &h;
            if t > Rat::zero() {
                points.push((i, r.scale(&t)));
            }
        }
    }

    let chart = Chart::new(&normal, level);
    let flip = |p: [f64; 2]| [p[0], -p[1]];
    let placed_cells: Vec<Vec<[f64; 2]>> = cells
        .iter()
        .map(|c| c.vertices.iter().map(|v| flip(chart.place(v))).collect())
        .collect();
    let placed_points: Vec<[f64; 2]> = points.iter().map(|(_, p)| flip(chart.place(p))).collect();

    let all = placed_cells.iter().flatten().chain(&placed_points);
    let (mut lo, mut hi) = ([f64::INFINITY; 2], [f64::NEG_INFINITY; 2]);
    for p in all {
        for k in 0..2 {
            lo[k] = lo[k].min(p[k]);
            hi[k] = hi[k].max(p[k]);
        }
    }
    let size = (hi[0] - lo[0]).max(hi[1] - lo[1]);
    let size = if size > 0.0 { size } else { 1.0 };
    let margin = 0.05 * size;
    let stroke = 0.005 * size;
    let radius = 0.012 * size;
    let font = 0.04 * size;

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n");
    writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"{} {} {} {}\">",
        num(lo[0] - margin),
        num(lo[1] - margin),
        num(hi[0] - lo[0] + 2.0 * margin),
        num(hi[1] - lo[1] + 2.0 * margin)
    )
    .unwrap();
    let coeffs: Vec<String> = normal.iter().map(ToString::to_string).collect();
    writeln!(out, "  <title>slice by ({}) . x = {level}</title>", coeffs.join(", ")).unwrap();
    for (cell, placed) in cells.iter().zip(&placed_cells) {
        let ids: Vec<String> = cell.cone.iter().map(usize::to_string).collect();
        writeln!(
            out,
            "  <g class=\"cell\" data-cone=\"{}\" stroke=\"black\" stroke-width=\"{}\" fill=\"none\">",
            ids.join(" "),
            num(stroke)
        )
        .unwrap();
        if cell.edges.is_empty() {
            for p in placed {
                writeln!(
                    out,
                    "    <circle cx=\"{}\" cy=\"{}\" r=\"{}\"/>",
                    num(p[0]),
                    num(p[1]),
                    num(radius)
                )
                .unwrap();
            }
        }
        for &(a, b) in &cell.edges {
            writeln!(
                out,
                "    <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>",
                num(placed[a][0]),
                num(placed[a][1]),
                num(placed[b][0]),
                num(placed[b][1])
            )
            .unwrap();
        }
        out.push_str("  </g>\n");
    }
    for ((i, _), p) in points.iter().zip(&placed_points) {
        writeln!(out, "  <g class=\"ray\" data-ray=\"{i}\">").unwrap();
        writeln!(
            out,
            "    <circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"black\"/>",
            num(p[0]),
            num(p[1]),
            num(radius)
        )
        .unwrap();
        writeln!(
            out,
            "    <text x=\"{}\" y=\"{}\" font-size=\"{}\" font-family=\"sans-serif\">{}</text>",
            num(p[0] + radius),
            num(p[1] - radius),
            num(font),
            ray_label(&fan.rays()[*i])
        )
        .unwrap();
        out.push_str("  </g>\n");
    }
    out.push_str("</svg>\n");
    Ok(out)
}
