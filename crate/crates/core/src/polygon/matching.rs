use serde::Serialize;

use super::{PolygonError, PolygonTriangulation};

/// Matchings between the vertices strictly between `i` and `j` (clockwise)
/// and the triangles of a triangulation: each vertex gets a distinct
/// triangle containing it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatchingSet {
    pub i: usize,
    pub j: usize,
    /// `i+1, .., j-1`, reduced to `1..=n`.
    pub vertices: Vec<usize>,
    /// One entry per matching; `matching[k]` is the index (into
    /// [`PolygonTriangulation::triangles`]) of the triangle given to
    /// `vertices[k]`.
    pub matchings: Vec<Vec<usize>>,
}

impl MatchingSet {
    pub fn len(&self) -> usize {
        self.matchings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.matchings.is_empty()
    }
}

/// Enumerate `M(i, j)` by backtracking over the vertices in clockwise order.
pub fn matchings(t: &PolygonTriangulation, i: usize, j: usize) -> Result<MatchingSet, PolygonError> {
    let n = t.n();
    for v in [i, j] {
        if v == 0 || v > n {
            return Err(PolygonError::VertexOutOfRange { vertex: v, n });
        }
    }
    let gap = (j + n - i) % n;
    if gap <= 1 || gap == n - 1 {
        return Err(PolygonError::AdjacentVertices(i, j));
    }
    let vertices: Vec<usize> = (1..gap).map(|k| (i - 1 + k) % n + 1).collect();
    let options: Vec<Vec<usize>> = vertices
        .iter()
        .map(|&v| {
            t.triangles()
                .iter()
                .enumerate()
                .filter(|(_, tri)| tri.contains(&v))
                .map(|(k, _)| k)
                .collect()
        })
        .collect();
    let mut used = vec![false; t.triangles().len()];
    let mut current = Vec::with_capacity(vertices.len());
    let mut found = Vec::new();
    extend(&options, &mut used, &mut current, &mut found);
    Ok(MatchingSet {
        i,
        j,
        vertices,
        matchings: found,
    })
}

fn extend(options: &[Vec<usize>], used: &mut [bool], current: &mut Vec<usize>, found: &mut Vec<Vec<usize>>) {
    let depth = current.len();
    if depth == options.len() {
        found.push(current.clone());
        return;
    }
    for &tri in &options[depth] {
        if used[tri] {
            continue;
        }
        used[tri] = true;
        current.push(tri);
        extend(options, used, current, found);
        current.pop();
        used[tri] = false;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fan_hexagon_counts() {
        let t = PolygonTriangulation::fan(6).unwrap();
        // triangles: 0 = 123, 1 = 134, 2 = 145, 3 = 156
        let m62 = matchings(&t, 6, 2).unwrap();
        assert_eq!(m62.vertices, vec![1]);
        assert_eq!(m62.len(), 4);

        let m63 = matchings(&t, 6, 3).unwrap();
        assert_eq!(m63.vertices, vec![1, 2]);
        assert_eq!(m63.matchings, vec![vec![1, 0], vec![2, 0], vec![3, 0]]);

        let m36 = matchings(&t, 3, 6).unwrap();
        assert_eq!(m36.vertices, vec![4, 5]);
        assert_eq!(m36.matchings, vec![vec![1, 2], vec![1, 3], vec![2, 3]]);
    }

    #[test]
    fn adjacent_vertices_are_rejected() {
        let t = PolygonTriangulation::fan(6).unwrap();
        assert_eq!(matchings(&t, 6, 1), Err(PolygonError::AdjacentVertices(6, 1)));
        assert_eq!(matchings(&t, 2, 1), Err(PolygonError::AdjacentVertices(2, 1)));
        assert_eq!(matchings(&t, 3, 3), Err(PolygonError::AdjacentVertices(3, 3)));
        assert!(matches!(matchings(&t, 0, 3), Err(PolygonError::VertexOutOfRange { .. })));
    }
}
