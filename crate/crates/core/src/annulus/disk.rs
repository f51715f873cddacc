use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::AnnulusError;
use crate::polygon::enumerate_triangulations;
use crate::quiddity::QuidditySequence;

/// An arc of a punctured disk with marked points `1..=n` clockwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DiskArc {
    /// From a marked point to the puncture.
    Puncture(usize),
    /// From `i` to `j` around the side away from the puncture, cutting off
    /// the marked points `i+1, .., j-1` (cyclically).
    Boundary(usize, usize),
}

impl fmt::Display for DiskArc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiskArc::Puncture(v) => write!(f, "({v},p)"),
            DiskArc::Boundary(i, j) => write!(f, "[{i},{j}]"),
        }
    }
}

/// A triangulation of the once-punctured disk without self-folded
/// triangles: `n` pairwise non-crossing arcs, at least two of them at the
/// puncture.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "DiskJson", into = "DiskJson")]
pub struct PuncturedDiskTriangulation {
    n: usize,
    arcs: BTreeSet<DiskArc>,
    /// Boundary labels of each triangle; the puncture is `None`.
    triangles: Vec<[Option<usize>; 3]>,
}

impl PuncturedDiskTriangulation {
    pub fn new(n: usize, arcs: impl IntoIterator<Item = DiskArc>) -> Result<Self, AnnulusError> {
        if n < 2 {
            return Err(AnnulusError::TooFewVertices { n, min: 2 });
        }
        let mut set = BTreeSet::new();
        for arc in arcs {
            check_arc(n, arc)?;
            if !set.insert(arc) {
                return Err(AnnulusError::DuplicateArc(arc));
            }
        }
        let list: Vec<DiskArc> = set.iter().copied().collect();
        for (k, &a) in list.iter().enumerate() {
            for &b in &list[k + 1..] {
                if disk_arcs_cross(n, a, b) {
                    return Err(AnnulusError::CrossingArcs(a, b));
                }
            }
        }
        if set.len() != n {
            return Err(AnnulusError::WrongCount {
                found: set.len(),
                expected: n,
            });
        }
        let spokes: Vec<usize> = set
            .iter()
            .filter_map(|a| match a {
                DiskArc::Puncture(v) => Some(*v),
                DiskArc::Boundary(..) => None,
            })
            .collect();
        if spokes.len() < 2 {
            return Err(AnnulusError::SelfFolded(spokes.len()));
        }
        let triangles = disk_triangles(n, &set, &spokes)?;
        Ok(Self { n, arcs: set, triangles })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> &BTreeSet<DiskArc> {
        &self.arcs
    }

    pub fn triangles(&self) -> &[[Option<usize>; 3]] {
        &self.triangles
    }

    /// Corners of triangles at each marked point.
    pub fn quiddity(&self) -> QuidditySequence {
        let mut corners = vec![0i64; self.n];
        for v in self.triangles.iter().flatten().flatten() {
            corners[v - 1] += 1;
        }
        QuidditySequence::from_ints(corners).expect("every marked point has a corner")
    }
}

fn check_arc(n: usize, arc: DiskArc) -> Result<(), AnnulusError> {
    let ends: &[usize] = match &arc {
        DiskArc::Puncture(v) => std::slice::from_ref(v),
        DiskArc::Boundary(i, j) => &[*i, *j],
    };
    for &vertex in ends {
        if vertex == 0 || vertex > n {
            return Err(AnnulusError::VertexOutOfRange { vertex, n });
        }
    }
    if let DiskArc::Boundary(i, j) = arc {
        // an empty run is a boundary edge; i == j would be a loop
        if i == j || forward(n, i, j) < 2 {
            return Err(AnnulusError::DegenerateArc(arc));
        }
    }
    Ok(())
}

/// Steps from `i` to `j` going clockwise, in `0..n`.
fn forward(n: usize, i: usize, j: usize) -> usize {
    (j + n - i) % n
}

/// Boundary edges `(e, e+1)` lying under a boundary arc, by starting vertex.
fn edges_under(n: usize, i: usize, j: usize) -> BTreeSet<usize> {
    (0..forward(n, i, j)).map(|k| (i - 1 + k) % n + 1).collect()
}

fn strictly_inside(n: usize, (i, j): (usize, usize), v: usize) -> bool {
    let d = forward(n, i, v);
    d > 0 && d < forward(n, i, j)
}

fn disk_arcs_cross(n: usize, a: DiskArc, b: DiskArc) -> bool {
    match (a, b) {
        (DiskArc::Puncture(_), DiskArc::Puncture(_)) => false,
        (DiskArc::Puncture(v), DiskArc::Boundary(i, j)) | (DiskArc::Boundary(i, j), DiskArc::Puncture(v)) => {
            strictly_inside(n, (i, j), v)
        }
        (DiskArc::Boundary(i, j), DiskArc::Boundary(k, l)) => {
            let (x, y) = (edges_under(n, i, j), edges_under(n, k, l));
            !(x.is_subset(&y) || y.is_subset(&x) || x.is_disjoint(&y))
        }
    }
}

/// Sectors between consecutive spokes each hold the triangle at the
/// puncture and a triangulated polygon under the arc joining the spokes.
fn disk_triangles(
    n: usize,
    arcs: &BTreeSet<DiskArc>,
    spokes: &[usize],
) -> Result<Vec<[Option<usize>; 3]>, AnnulusError> {
    let mut triangles = Vec::new();
    for (k, &a) in spokes.iter().enumerate() {
        let b = spokes[(k + 1) % spokes.len()];
        triangles.push([Some(a), Some(b), None]);
        fill_polygon(n, arcs, a, forward(n, a, b), &mut triangles)?;
    }
    Ok(triangles)
}

/// Triangulate the polygon `a, a+1, .., a+len` whose closing side is an arc.
fn fill_polygon(
    n: usize,
    arcs: &BTreeSet<DiskArc>,
    a: usize,
    len: usize,
    out: &mut Vec<[Option<usize>; 3]>,
) -> Result<(), AnnulusError> {
    if len < 2 {
        return Ok(());
    }
    let at = |k: usize| (a - 1 + k) % n + 1;
    let side = |s: usize, t: usize| t - s == 1 || arcs.contains(&DiskArc::Boundary(at(s), at(t)));
    if !arcs.contains(&DiskArc::Boundary(a, at(len))) {
        return Err(AnnulusError::NotTriangulated);
    }
    let apex = (1..len)
        .find(|&c| side(0, c) && side(c, len))
        .ok_or(AnnulusError::NotTriangulated)?;
    out.push([Some(a), Some(at(apex)), Some(at(len))]);
    fill_polygon(n, arcs, a, apex, out)?;
    fill_polygon(n, arcs, at(apex), len - apex, out)
}

/// All arcs at the puncture.
pub fn star_triangulation(n: usize) -> Result<PuncturedDiskTriangulation, AnnulusError> {
    PuncturedDiskTriangulation::new(n, (1..=n).map(DiskArc::Puncture))
}

pub fn quiddity_of_disk(t: &PuncturedDiskTriangulation) -> QuidditySequence {
    t.quiddity()
}

/// Every triangulation of the punctured disk with `n` marked points and no
/// self-folded triangle: a set of at least two spokes, and a polygon
/// triangulation under each arc between consecutive spokes.
pub fn enumerate_disk_triangulations(n: usize) -> Result<Vec<PuncturedDiskTriangulation>, AnnulusError> {
    if n < 2 {
        return Err(AnnulusError::TooFewVertices { n, min: 2 });
    }
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() < 2 {
            continue;
        }
        let spokes: Vec<usize> = (1..=n).filter(|v| mask & (1 << (v - 1)) != 0).collect();
        let mut partial: Vec<Vec<DiskArc>> = vec![spokes.iter().map(|&v| DiskArc::Puncture(v)).collect()];
        for (k, &a) in spokes.iter().enumerate() {
            let b = spokes[(k + 1) % spokes.len()];
            let gap = forward(n, a, b);
            if gap < 2 {
                continue;
            }
            let at = |x: usize| (a + x - 2) % n + 1;
            let choices: Vec<Vec<DiskArc>> = enumerate_triangulations(gap + 1)
                .expect("sector polygons are small")
                .iter()
                .map(|t| {
                    let mut arcs: Vec<DiskArc> = t
                        .diagonals()
                        .iter()
                        .map(|&(x, y)| DiskArc::Boundary(at(x), at(y)))
                        .collect();
                    arcs.push(DiskArc::Boundary(a, b));
                    arcs
                })
                .collect();
            partial = partial
                .iter()
                .flat_map(|p| {
                    choices.iter().map(move |c| {
                        let mut next = p.clone();
                        next.extend_from_slice(c);
                        next
                    })
                })
                .collect();
        }
        for arcs in partial {
            out.push(PuncturedDiskTriangulation::new(n, arcs).expect("enumerated sets are triangulations"));
        }
    }
    out.sort_by(|x, y| x.arcs.cmp(&y.arcs));
    Ok(out)
}

#[derive(Serialize, Deserialize)]
struct DiskJson {
    arcs: Vec<[String; 2]>,
    n: usize,
}

impl From<PuncturedDiskTriangulation> for DiskJson {
    fn from(t: PuncturedDiskTriangulation) -> Self {
        DiskJson {
            arcs: t
                .arcs
                .iter()
                .map(|a| match a {
                    DiskArc::Puncture(v) => [v.to_string(), "p".to_string()],
                    DiskArc::Boundary(i, j) => [i.to_string(), j.to_string()],
                })
                .collect(),
            n: t.n,
        }
    }
}

impl TryFrom<DiskJson> for PuncturedDiskTriangulation {
    type Error = String;

    fn try_from(value: DiskJson) -> Result<Self, Self::Error> {
        let label = |s: &str| s.parse::<usize>().map_err(|_| format!("bad marked point {s:?}"));
        let arcs = value
            .arcs
            .iter()
            .map(|[a, b]| match (a.as_str(), b.as_str()) {
                ("p", v) | (v, "p") => Ok(DiskArc::Puncture(label(v)?)),
                (i, j) => Ok(DiskArc::Boundary(label(i)?, label(j)?)),
            })
            .collect::<Result<Vec<_>, String>>()?;
        Self::new(value.n, arcs).map_err(|e| e.to_string())
    }
}
