use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::Zero;

use super::{ClusterError, Generator, LaurentElement};
use crate::grid::{Classification, FriezeGrid};
use crate::polygon::{crosses, PolygonTriangulation};

/// Which crossing arc to exchange first when expanding a diagonal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CrossingChoice {
    /// The arc met first walking from the smaller endpoint.
    #[default]
    First,
    /// The arc met last, i.e. first walking back from the larger endpoint.
    Last,
}

/// Cluster variable `x_{ij}` expressed in the generators of `t`.
pub fn cluster_variable(t: &PolygonTriangulation, i: usize, j: usize) -> Result<LaurentElement, ClusterError> {
    cluster_variable_with(t, i, j, CrossingChoice::First)
}

pub fn cluster_variable_with(
    t: &PolygonTriangulation,
    i: usize,
    j: usize,
    choice: CrossingChoice,
) -> Result<LaurentElement, ClusterError> {
    check_segment(t.n(), i, j)?;
    Ok(Expander::new(t, choice).variable(i, j))
}

fn check_segment(n: usize, i: usize, j: usize) -> Result<(), ClusterError> {
    for vertex in [i, j] {
        if vertex == 0 || vertex > n {
            return Err(ClusterError::VertexOutOfRange { vertex, n });
        }
    }
    if i == j {
        return Err(ClusterError::SameVertex(i));
    }
    Ok(())
}

struct Expander<'a> {
    t: &'a PolygonTriangulation,
    choice: CrossingChoice,
    memo: HashMap<(usize, usize), LaurentElement>,
}

impl<'a> Expander<'a> {
    fn new(t: &'a PolygonTriangulation, choice: CrossingChoice) -> Self {
        Self {
            t,
            choice,
            memo: HashMap::new(),
        }
    }

    fn variable(&mut self, a: usize, b: usize) -> LaurentElement {
        let (i, j) = (a.min(b), a.max(b));
        if self.t.is_boundary((i, j)) || self.t.contains((i, j)) {
            return LaurentElement::generator(Generator::new(i, j));
        }
        if let Some(known) = self.memo.get(&(i, j)) {
            return known.clone();
        }
        let (start, end) = match self.choice {
            CrossingChoice::First => (i, j),
            CrossingChoice::Last => (j, i),
        };
        let (k, l) = self.arc_next_to(start, end);
        // x_{start,end} x_{kl} = x_{start,k} x_{end,l} + x_{start,l} x_{end,k}
        let first = self.variable(start, k).mul(&self.variable(end, l));
        let second = self.variable(start, l).mul(&self.variable(end, k));
        let value = first.add(&second).div_by_generator(Generator::new(k, l));
        self.memo.insert((i, j), value.clone());
        value
    }

    /// The side `(k, l)` opposite `start` in the triangle of `t` at `start`
    /// that the segment towards `end` enters.
    fn arc_next_to(&self, start: usize, end: usize) -> (usize, usize) {
        self.t
            .triangles()
            .iter()
            .filter(|tri| tri.contains(&start))
            .find_map(|tri| {
                let mut others = tri.iter().copied().filter(|&v| v != start);
                let (k, l) = (others.next()?, others.next()?);
                crosses((start, end), (k, l)).then_some((k, l))
            })
            .expect("a diagonal not in a triangulation crosses one of its arcs")
    }
}

/// Every `x_{ij}`, `1 <= i < j <= n`, over the generators of `t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClusterFrieze {
    t: PolygonTriangulation,
    variables: BTreeMap<(usize, usize), LaurentElement>,
}

impl ClusterFrieze {
    pub fn triangulation(&self) -> &PolygonTriangulation {
        &self.t
    }

    pub fn n(&self) -> usize {
        self.t.n()
    }

    pub fn variables(&self) -> &BTreeMap<(usize, usize), LaurentElement> {
        &self.variables
    }

    /// `x_{ij}` for distinct vertices in either order; zero when `i == j`.
    pub fn get(&self, i: usize, j: usize) -> LaurentElement {
        if i == j {
            return LaurentElement::zero();
        }
        self.variables[&(i.min(j), i.max(j))].clone()
    }
}

pub fn cluster_frieze(t: &PolygonTriangulation) -> ClusterFrieze {
    let n = t.n();
    let mut expander = Expander::new(t, CrossingChoice::First);
    let mut variables = BTreeMap::new();
    for i in 1..=n {
        for j in i + 1..=n {
            variables.insert((i, j), expander.variable(i, j));
        }
    }
    ClusterFrieze { t: t.clone(), variables }
}

/// Set every generator to 1 and lay the values out as the rows of a closed
/// frieze of order `n`.
pub fn specialize_to_one(cf: &ClusterFrieze) -> FriezeGrid {
    let n = cf.n();
    let label = |v: usize| (v - 1) % n + 1;
    let rows: Vec<Vec<BigInt>> = (1..n)
        .map(|r| {
            (0..n)
                .map(|i| {
                    let (a, b) = (label(i + n), label(i + r + 1));
                    if a == b {
                        BigInt::zero()
                    } else {
                        cf.get(a, b).at_one()
                    }
                })
                .collect()
        })
        .collect();
    FriezeGrid::from_parts(
        cf.t.quiddity(),
        rows,
        Classification::Closed { order: n },
    )
}
