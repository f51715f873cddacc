use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use super::PolygonError;
use crate::classify::classify;
use crate::grid::Classification;
use crate::quiddity::{cut_raw, QuidditySequence};

/// Largest `n` accepted by [`enumerate_triangulations`]; Catalan(10) = 16796.
pub const MAX_ENUMERATION: usize = 12;

/// A diagonal `(i, j)` with `1 <= i < j <= n`.
pub type Diagonal = (usize, usize);

/// Vertex labels of a triangle, ascending.
pub type Triangle = [usize; 3];

/// A convex n-gon with vertices `1..=n` clockwise and a maximal set of
/// pairwise non-crossing diagonals.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "TriangulationJson", into = "TriangulationJson")]
pub struct PolygonTriangulation {
    n: usize,
    diagonals: BTreeSet<Diagonal>,
    triangles: Vec<Triangle>,
}

#[derive(Serialize, Deserialize)]
struct TriangulationJson {
    n: usize,
    diagonals: Vec<[usize; 2]>,
}

impl TryFrom<TriangulationJson> for PolygonTriangulation {
    type Error = PolygonError;

    fn try_from(value: TriangulationJson) -> Result<Self, Self::Error> {
        Self::new(value.n, value.diagonals.into_iter().map(|[i, j]| (i, j)))
    }
}

impl From<PolygonTriangulation> for TriangulationJson {
    fn from(t: PolygonTriangulation) -> Self {
        TriangulationJson {
            n: t.n,
            diagonals: t.diagonals.iter().map(|&(i, j)| [i, j]).collect(),
        }
    }
}

/// `(a,b)` and `(c,d)` cross iff their endpoints interleave.
pub fn crosses((a, b): Diagonal, (c, d): Diagonal) -> bool {
    let (a, b) = (a.min(b), a.max(b));
    let (c, d) = (c.min(d), c.max(d));
    (a < c && c < b && b < d) || (c < a && a < d && d < b)
}

/// Check a diagonal set and list the `n - 2` triangles it cuts the n-gon into.
pub fn validate(
    n: usize,
    diagonals: impl IntoIterator<Item = Diagonal>,
) -> Result<(BTreeSet<Diagonal>, Vec<Triangle>), PolygonError> {
    if n < 3 {
        return Err(PolygonError::TooFewVertices(n));
    }
    let mut set = BTreeSet::new();
    for (i, j) in diagonals {
        if i == 0 || j == 0 || i > n || j > n {
            return Err(PolygonError::VertexOutOfRange { vertex: i.max(j), n });
        }
        let d = (i.min(j), i.max(j));
        if d.1 - d.0 < 2 || (d.0 == 1 && d.1 == n) {
            return Err(PolygonError::NotADiagonal(d));
        }
        if !set.insert(d) {
            return Err(PolygonError::DuplicateDiagonal(d));
        }
    }
    let list: Vec<Diagonal> = set.iter().copied().collect();
    for (k, &d) in list.iter().enumerate() {
        if let Some(&e) = list[k + 1..].iter().find(|&&e| crosses(d, e)) {
            return Err(PolygonError::CrossingDiagonals(d, e));
        }
    }
    if set.len() != n - 3 {
        return Err(PolygonError::WrongCount {
            found: set.len(),
            expected: n - 3,
        });
    }
    let triangles = triangles_of(n, &set);
    debug_assert_eq!(triangles.len(), n - 2);
    Ok((set, triangles))
}

fn triangles_of(n: usize, diagonals: &BTreeSet<Diagonal>) -> Vec<Triangle> {
    let edge = |i: usize, j: usize| j == i + 1 || (i == 1 && j == n) || diagonals.contains(&(i, j));
    // every triangle of edges is a face: a vertex inside it would force a
    // crossing with one of its sides
    let mut out = Vec::with_capacity(n - 2);
    for a in 1..=n {
        for b in a + 1..=n {
            if !edge(a, b) {
                continue;
            }
            for c in b + 1..=n {
                if edge(b, c) && edge(a, c) {
                    out.push([a, b, c]);
                }
            }
        }
    }
    out
}

impl PolygonTriangulation {
    pub fn new(n: usize, diagonals: impl IntoIterator<Item = Diagonal>) -> Result<Self, PolygonError> {
        let (diagonals, triangles) = validate(n, diagonals)?;
        Ok(Self {
            n,
            diagonals,
            triangles,
        })
    }

    /// All diagonals from vertex 1.
    pub fn fan(n: usize) -> Result<Self, PolygonError> {
        Self::new(n, (3..n).map(|j| (1, j)))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn diagonals(&self) -> &BTreeSet<Diagonal> {
        &self.diagonals
    }

    /// Triangles in lexicographic order of their sorted labels.
    pub fn triangles(&self) -> &[Triangle] {
        &self.triangles
    }

    pub fn contains(&self, d: Diagonal) -> bool {
        self.diagonals.contains(&(d.0.min(d.1), d.0.max(d.1)))
    }

    /// True for boundary edges `(i, i+1)` and `(1, n)`.
    pub fn is_boundary(&self, d: Diagonal) -> bool {
        let (i, j) = (d.0.min(d.1), d.0.max(d.1));
        j == i + 1 || (i == 1 && j == self.n)
    }

    /// Number of triangles at each vertex, starting at vertex 1.
    pub fn quiddity(&self) -> QuidditySequence {
        let mut counts = vec![0u64; self.n];
        for t in &self.triangles {
            for &v in t {
                counts[v - 1] += 1;
            }
        }
        QuidditySequence::from_ints(counts).expect("every vertex lies in a triangle")
    }
}

impl fmt::Display for PolygonTriangulation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} {{", self.n)?;
        for (k, (i, j)) in self.diagonals.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "({i},{j})")?;
        }
        write!(f, "}}")
    }
}

/// `q_i` = number of triangles at vertex `i`.
pub fn quiddity_of(t: &PolygonTriangulation) -> QuidditySequence {
    t.quiddity()
}

/// All triangulations of the n-gon, sorted by their diagonal lists.
pub fn enumerate_triangulations(n: usize) -> Result<Vec<PolygonTriangulation>, PolygonError> {
    if n < 3 {
        return Err(PolygonError::TooFewVertices(n));
    }
    if n > MAX_ENUMERATION {
        return Err(PolygonError::TooLarge {
            n,
            max: MAX_ENUMERATION,
        });
    }
    let mut sets = sub_triangulations(1, n);
    for s in &mut sets {
        s.sort_unstable();
    }
    sets.sort();
    Ok(sets
        .into_iter()
        .map(|s| PolygonTriangulation::new(n, s).expect("enumerated sets are triangulations"))
        .collect())
}

/// Triangulations of the sub-polygon `a, a+1, .., b` spanned by the edge `(a, b)`.
fn sub_triangulations(a: usize, b: usize) -> Vec<Vec<Diagonal>> {
    if b - a < 2 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for apex in a + 1..b {
        let left = sub_triangulations(a, apex);
        let right = sub_triangulations(apex, b);
        for l in &left {
            for r in &right {
                let mut set = Vec::with_capacity(l.len() + r.len() + 2);
                if apex - a >= 2 {
                    set.push((a, apex));
                }
                if b - apex >= 2 {
                    set.push((apex, b));
                }
                set.extend_from_slice(l);
                set.extend_from_slice(r);
                out.push(set);
            }
        }
    }
    out
}

/// Inverse of [`quiddity_of`]: cut the smallest-index ear, triangulate the
/// smaller polygon, and glue the ear back as the diagonal between its
/// two neighbours.
pub fn triangulation_from_quiddity(q: &QuidditySequence) -> Result<PolygonTriangulation, PolygonError> {
    match classify(q) {
        Classification::Closed { order } if order == q.len() => {}
        other => {
            return Err(PolygonError::NotClosed {
                quiddity: q.clone(),
                classification: other.label(),
            })
        }
    }
    let labels: Vec<usize> = (1..=q.len()).collect();
    let diagonals = rebuild(q.entries().to_vec(), labels);
    PolygonTriangulation::new(q.len(), diagonals)
}

fn rebuild(entries: Vec<BigInt>, labels: Vec<usize>) -> Vec<Diagonal> {
    let n = entries.len();
    if n <= 3 {
        return Vec::new();
    }
    let ear = entries
        .iter()
        .position(One::is_one)
        .expect("closed quiddity sequences have an entry 1");
    let before = labels[(ear + n - 1) % n];
    let after = labels[(ear + 1) % n];
    let reduced = cut_raw(&entries, ear);
    let mut rest_labels = labels;
    rest_labels.remove(ear);
    let mut diagonals = rebuild(reduced, rest_labels);
    diagonals.push((before.min(after), before.max(after)));
    diagonals
}

/// Catalan number `C_k`.
pub fn catalan(k: usize) -> BigInt {
    // C_k = binom(2k, k) / (k + 1)
    let mut c = BigInt::one();
    for i in 0..k {
        c = c * (2 * (2 * i + 1)) / (i + 2);
    }
    c
}
