use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use serde::ser::{Serialize, SerializeStruct, Serializer};

use super::AnnulusError;
use crate::classify::{classify, reduce_infinite};
use crate::grid::Classification;
use crate::quiddity::QuidditySequence;

/// Most arcs [`annulus_from_quiddity`] will build.
const MAX_ARCS: usize = 1 << 20;

/// A marked point on the outer (`O1..On`) or inner (`I1..Im`) boundary.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Mark {
    Outer(usize),
    Inner(usize),
}

impl fmt::Display for Mark {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mark::Outer(k) => write!(f, "O{k}"),
            Mark::Inner(k) => write!(f, "I{k}"),
        }
    }
}

/// A triangulated annulus, stored as arcs and the triangles between them.
///
/// Bridging arcs join the two boundaries and come first, in order around
/// the annulus. Peripheral arcs join outer points and cut off ears; a
/// peripheral arc `(Oa, Ob)` cuts off `Oa+1, .., Ob-1` (cyclically) and
/// is a loop when the ear was glued onto a single point.
///
/// With `spiral` set the arcs near the inner boundary spiral around it and
/// are not listed; only the peripheral arcs are, and every outer point
/// outside all ears (a root) carries two corners of spiralling triangles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnnulusTriangulation {
    n_outer: usize,
    n_inner: usize,
    spiral: bool,
    arcs: Vec<(Mark, Mark)>,
    triangles: Vec<[Mark; 3]>,
    roots: Vec<usize>,
}

/// How [`annulus_from_quiddity`] got from the input to a sequence with all
/// entries at least 2 and back.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GlueTrace {
    /// The input with its ears cut, all entries at least 2.
    pub reduced: Vec<BigInt>,
    /// 0-based cut positions in the order they were made. Gluing in
    /// reverse order, each ear back at the position it was cut from,
    /// restores the input with its labelling.
    pub cuts: Vec<usize>,
    /// The reduced sequence was rotated left by this much so that its last
    /// entry exceeds 2 before the bridging arcs were laid out.
    pub rotation: usize,
}

impl AnnulusTriangulation {
    pub fn n_outer(&self) -> usize {
        self.n_outer
    }

    pub fn n_inner(&self) -> usize {
        self.n_inner
    }

    pub fn is_spiral(&self) -> bool {
        self.spiral
    }

    pub fn arcs(&self) -> &[(Mark, Mark)] {
        &self.arcs
    }

    pub fn triangles(&self) -> &[[Mark; 3]] {
        &self.triangles
    }

    fn corners(&self) -> (Vec<i64>, Vec<i64>) {
        let mut outer = vec![0i64; self.n_outer];
        let mut inner = vec![0i64; self.n_inner];
        for mark in self.triangles.iter().flatten() {
            match *mark {
                Mark::Outer(k) => outer[k - 1] += 1,
                Mark::Inner(k) => inner[k - 1] += 1,
            }
        }
        for &r in &self.roots {
            outer[r - 1] += 2;
        }
        (outer, inner)
    }

    /// Triangle corners at `O1..On`.
    pub fn outer_quiddity(&self) -> QuidditySequence {
        QuidditySequence::from_ints(self.corners().0).expect("every outer point has a corner")
    }

    /// Triangle corners at `I1..Im`, in boundary order.
    pub fn inner_quiddity(&self) -> Result<QuidditySequence, AnnulusError> {
        if self.spiral {
            return Err(AnnulusError::SpiralHasNoInnerQuiddity);
        }
        Ok(QuidditySequence::from_ints(self.corners().1).expect("every inner point has a corner"))
    }

    /// Consistency of the stored triangles with the arcs: as many triangles
    /// as arcs (Euler characteristic 0), and `degree + 1` corners at every
    /// marked point, loops counting twice.
    pub fn validate(&self) -> Result<(), AnnulusError> {
        let mut degree_outer = vec![1i64; self.n_outer];
        let mut degree_inner = vec![1i64; self.n_inner];
        for (a, b) in &self.arcs {
            for mark in [a, b] {
                match *mark {
                    Mark::Outer(k) if (1..=self.n_outer).contains(&k) => degree_outer[k - 1] += 1,
                    Mark::Inner(k) if (1..=self.n_inner).contains(&k) => degree_inner[k - 1] += 1,
                    _ => return Err(AnnulusError::NotTriangulated),
                }
            }
        }
        if self.spiral {
            if self.n_inner != 0 || self.roots.is_empty() {
                return Err(AnnulusError::NotTriangulated);
            }
            for &r in &self.roots {
                degree_outer[r - 1] += 1;
            }
        } else if self.triangles.len() != self.arcs.len() {
            return Err(AnnulusError::NotTriangulated);
        }
        let (outer, inner) = self.corners();
        if outer != degree_outer || (!self.spiral && inner != degree_inner) {
            return Err(AnnulusError::NotTriangulated);
        }
        Ok(())
    }
}

impl Serialize for AnnulusTriangulation {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let arcs: Vec<[String; 2]> = self
            .arcs
            .iter()
            .map(|(a, b)| [a.to_string(), b.to_string()])
            .collect();
        let mut s = serializer.serialize_struct("AnnulusTriangulation", 4)?;
        s.serialize_field("arcs", &arcs)?;
        s.serialize_field("inner", &self.n_inner)?;
        s.serialize_field("outer", &self.n_outer)?;
        s.serialize_field("spiral", &self.spiral)?;
        s.end()
    }
}

/// Outer points are tracked by construction id until all ears are back.
#[derive(Clone, Copy)]
enum Node {
    Outer(usize),
    Inner(usize),
}

/// Triangulated surface realising an infinite frieze with first row `q`.
///
/// Ears are cut at entries 1 until every entry is at least 2. If all are
/// 2 the surface is a punctured disk, drawn as an annulus whose inner
/// boundary has no marked points and is encircled by spiralling arcs.
/// Otherwise, after rotating so the last entry exceeds 2, the outer point
/// with entry `a` sends `a - 1` bridging arcs to consecutive inner points,
/// and neighbouring outer points share the inner point between them; this
/// uses `sum(a) - 2n` inner points. Finally the ears are glued back as
/// peripheral arcs.
///
/// `I1` is the first inner point reached from `O1`. The inner points are
/// numbered along the inner boundary in its own orientation, which runs
/// against the outer one.
pub fn annulus_from_quiddity(q: &QuidditySequence) -> Result<(AnnulusTriangulation, GlueTrace), AnnulusError> {
    let reduction = reduce_infinite(q).map_err(|c| AnnulusError::NotInfinite {
        quiddity: q.clone(),
        classification: c.label(),
    })?;
    let reduced = reduction.reduced;
    let arc_total: BigInt = reduced.iter().map(|a| a - 1).sum::<BigInt>() + q.len();
    let too_large = || AnnulusError::TooLarge {
        arcs: arc_total.clone(),
        max: MAX_ARCS,
    };
    if arc_total > BigInt::from(MAX_ARCS) {
        return Err(too_large());
    }
    let b: Vec<usize> = reduced
        .iter()
        .map(|a| a.to_usize().ok_or_else(too_large))
        .collect::<Result<_, _>>()?;
    let k = b.len();
    let spiral = b.iter().all(|&a| a == 2);

    let mut arcs: Vec<(Node, Node)> = Vec::new();
    let mut triangles: Vec<[Node; 3]> = Vec::new();
    let mut rotation = 0;
    let mut n_inner = 0;
    if !spiral {
        rotation = (0..k)
            .find(|&r| b[(r + k - 1) % k] > 2)
            .expect("not all entries are 2");
        n_inner = b.iter().sum::<usize>() - 2 * k;
        // (outer id, inner index, first arc at its outer point)
        let mut fan: Vec<(usize, usize, bool)> = Vec::new();
        let mut inner = 0;
        for step in 0..k {
            let v = (step + rotation) % k;
            for t in 0..b[v] - 1 {
                if t > 0 {
                    inner += 1;
                }
                fan.push((v, inner % n_inner, t == 0));
            }
        }
        debug_assert_eq!(inner, n_inner);
        for (idx, &(v, x, _)) in fan.iter().enumerate() {
            arcs.push((Node::Outer(v), Node::Inner(x)));
            let (w, y, starts) = fan[(idx + 1) % fan.len()];
            triangles.push(if starts {
                [Node::Outer(v), Node::Outer(w), Node::Inner(x)]
            } else {
                [Node::Outer(v), Node::Inner(x), Node::Inner(y)]
            });
        }
    }

    let mut order: Vec<usize> = (0..k).collect();
    let mut next_id = k;
    for &c in reduction.cuts.iter().rev() {
        let len = order.len();
        let (u, w) = (order[(c + len - 1) % len], order[c % len]);
        order.insert(c, next_id);
        arcs.push((Node::Outer(u), Node::Outer(w)));
        triangles.push([Node::Outer(u), Node::Outer(next_id), Node::Outer(w)]);
        next_id += 1;
    }

    let mut label = vec![0; next_id];
    for (pos, &id) in order.iter().enumerate() {
        label[id] = pos + 1;
    }
    let mark = |node: Node| match node {
        Node::Outer(id) => Mark::Outer(label[id]),
        Node::Inner(0) => Mark::Inner(1),
        Node::Inner(x) => Mark::Inner(n_inner - x + 1),
    };
    let annulus = AnnulusTriangulation {
        n_outer: order.len(),
        n_inner,
        spiral,
        arcs: arcs.into_iter().map(|(a, b)| (mark(a), mark(b))).collect(),
        triangles: triangles.into_iter().map(|t| t.map(mark)).collect(),
        roots: if spiral {
            (0..k).map(|id| label[id]).collect()
        } else {
            Vec::new()
        },
    };
    let trace = GlueTrace {
        reduced,
        cuts: reduction.cuts,
        rotation,
    };
    Ok((annulus, trace))
}

/// `(a_1, .., a_i + b, .., a_n)` for an infinite frieze `q`, 1-based `i`.
pub fn thicken(q: &QuidditySequence, i: usize, b: &BigInt) -> Result<QuidditySequence, AnnulusError> {
    let classification = classify(q);
    if !matches!(classification, Classification::Infinite) {
        return Err(AnnulusError::NotInfinite {
            quiddity: q.clone(),
            classification: classification.label(),
        });
    }
    if i == 0 || i > q.len() {
        return Err(AnnulusError::OutOfRange {
            position: i,
            len: q.len(),
        });
    }
    if !b.is_positive() {
        return Err(AnnulusError::NonPositiveThickening(b.clone()));
    }
    let mut entries = q.entries().to_vec();
    entries[i - 1] += b;
    Ok(QuidditySequence::new(entries).expect("entries stay positive"))
}
