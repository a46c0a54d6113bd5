//! Graphic matroids, their lattices of flats, and Kazhdan–Lusztig
//! polynomials computed straight from the defining recursion
//!
//! ```text
//! t^{rk M} P_M(1/t) = Σ_F χ_{[⊥,F]}(t) · P_{[F,⊤]}(t)
//! ```
//!
//! with `P = 1` in rank 0 and `deg P < rk/2`. Nothing here touches
//! symmetric functions.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::poly::IntPoly;

/// Largest ground set accepted by the brute-force flat enumeration.
pub const MAX_EDGES: usize = 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatroidError {
    #[error("edge {edge} uses vertex {vertex} but the graph has {vertices} vertices")]
    VertexOutOfRange {
        edge: usize,
        vertex: usize,
        vertices: usize,
    },
    #[error("{edges} edges exceeds the enumeration limit of {max}")]
    TooLarge { edges: usize, max: usize },
    #[error("flat {flat:#b} (interval rank {rank}): t^{low} gives {from_low} but t^{high} gives {from_high}")]
    InconsistentRead {
        flat: u32,
        rank: usize,
        low: usize,
        high: usize,
        from_low: String,
        from_high: String,
    },
    #[error("flat {flat:#b} (interval rank {rank}): nonzero coefficient {value} at t^{exponent}")]
    GapCoefficient {
        flat: u32,
        rank: usize,
        exponent: usize,
        value: String,
    },
}

#[derive(Deserialize)]
struct RawGraph {
    vertices: usize,
    edges: Vec<[usize; 2]>,
}

/// A multigraph viewed through its cycle matroid on the edge set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawGraph")]
pub struct GraphMatroid {
    vertices: usize,
    edges: Vec<[usize; 2]>,
}

impl TryFrom<RawGraph> for GraphMatroid {
    type Error = MatroidError;

    fn try_from(raw: RawGraph) -> Result<Self, MatroidError> {
        GraphMatroid::new(raw.vertices, raw.edges)
    }
}

impl GraphMatroid {
    pub fn new(vertices: usize, edges: Vec<[usize; 2]>) -> Result<Self, MatroidError> {
        for (edge, e) in edges.iter().enumerate() {
            if let Some(&vertex) = e.iter().find(|&&v| v >= vertices) {
                return Err(MatroidError::VertexOutOfRange { edge, vertex, vertices });
            }
        }
        if edges.len() > MAX_EDGES {
            return Err(MatroidError::TooLarge {
                edges: edges.len(),
                max: MAX_EDGES,
            });
        }
        Ok(GraphMatroid { vertices, edges })
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn edges(&self) -> &[[usize; 2]] {
        &self.edges
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn ground_mask(&self) -> u32 {
        ((1u64 << self.edges.len()) - 1) as u32
    }

    /// Size of a spanning forest of the edges in `mask`.
    pub fn rank(&self, mask: u32) -> usize {
        let mut parent: Vec<usize> = (0..self.vertices).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut rank = 0;
        for (i, &[a, b]) in self.edges.iter().enumerate() {
            if mask >> i & 1 == 0 {
                continue;
            }
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra] = rb;
                rank += 1;
            }
        }
        rank
    }

    pub fn full_rank(&self) -> usize {
        self.rank(self.ground_mask())
    }

    pub fn closure(&self, mask: u32) -> u32 {
        let r = self.rank(mask);
        (0..self.edges.len())
            .filter(|&e| mask >> e & 1 == 1 || self.rank(mask | 1 << e) == r)
            .fold(0, |acc, e| acc | 1 << e)
    }

    pub fn is_flat(&self, mask: u32) -> bool {
        let r = self.rank(mask);
        (0..self.edges.len()).all(|e| mask >> e & 1 == 1 || self.rank(mask | 1 << e) > r)
    }

    pub fn components(&self) -> usize {
        self.vertices - self.full_rank()
    }

    /// Enumerates every closed edge set.
    pub fn flats(&self) -> FlatLattice {
        let mut found: Vec<(usize, u32)> = (0..=self.ground_mask())
            .filter(|&m| self.is_flat(m))
            .map(|m| (self.rank(m), m))
            .collect();
        found.sort();
        FlatLattice {
            flats: found.iter().map(|&(_, m)| m).collect(),
            ranks: found.iter().map(|&(r, _)| r).collect(),
        }
    }
}

/// `K_{1,1,n}`: apexes 0 and 1 joined to each other and to spine vertices
/// `2..n+2`.
pub fn thagomizer_graph(n: usize) -> GraphMatroid {
    assert!(n >= 1, "thagomizer graphs need n ≥ 1");
    let mut edges = vec![[0, 1]];
    for v in 2..n + 2 {
        edges.push([0, v]);
        edges.push([1, v]);
    }
    GraphMatroid::new(n + 2, edges).expect("thagomizer edge list is valid")
}

/// The cycle on `m` vertices; `m = 2` gives a pair of parallel edges.
pub fn cycle_graph(m: usize) -> GraphMatroid {
    assert!(m >= 2, "cycles need m ≥ 2");
    let edges = (0..m).map(|i| [i, (i + 1) % m]).collect();
    GraphMatroid::new(m, edges).expect("cycle edge list is valid")
}

/// A path with `r` edges, whose matroid is Boolean of rank `r`.
pub fn path_graph(r: usize) -> GraphMatroid {
    let edges = (0..r).map(|i| [i, i + 1]).collect();
    GraphMatroid::new(r + 1, edges).expect("path edge list is valid")
}

/// Flats sorted by rank, so that a proper subflat always has a smaller index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlatLattice {
    flats: Vec<u32>,
    ranks: Vec<usize>,
}

impl FlatLattice {
    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    pub fn flats(&self) -> &[u32] {
        &self.flats
    }

    pub fn rank_of(&self, i: usize) -> usize {
        self.ranks[i]
    }

    pub fn bottom(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.flats.len() - 1
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.flats[i] & !self.flats[j] == 0
    }

    /// `μ(i, j)` for every `j`, zero unless `i ≤ j`.
    pub fn mobius_from(&self, i: usize) -> Vec<i64> {
        let mut mu = vec![0i64; self.len()];
        let up: Vec<usize> = (i..self.len()).filter(|&j| self.leq(i, j)).collect();
        mu[i] = 1;
        for (pos, &j) in up.iter().enumerate().skip(1) {
            let s: i64 = up[..pos].iter().filter(|&&k| self.leq(k, j)).map(|&k| mu[k]).sum();
            mu[j] = -s;
        }
        mu
    }

    /// `χ_{[i,j]}(t) = Σ_{i ≤ k ≤ j} μ(i,k) t^{rk j − rk k}`.
    pub fn interval_char_poly(&self, i: usize, j: usize) -> IntPoly {
        self.interval_char_poly_with(&self.mobius_from(i), i, j)
    }

    fn interval_char_poly_with(&self, mu: &[i64], i: usize, j: usize) -> IntPoly {
        let mut coeffs = vec![BigInt::zero(); self.ranks[j].saturating_sub(self.ranks[i]) + 1];
        for k in i..=j {
            if mu[k] != 0 && self.leq(k, j) {
                coeffs[self.ranks[j] - self.ranks[k]] += mu[k];
            }
        }
        IntPoly::from_coeffs(coeffs)
    }

    pub fn char_poly(&self) -> IntPoly {
        self.interval_char_poly(self.bottom(), self.top())
    }

    /// KL polynomial of every upper interval `[F, ⊤]`, indexed like the flats.
    pub fn upper_kl_polys(&self) -> Result<Vec<IntPoly>, MatroidError> {
        let top = self.top();
        let mut memo: Vec<Option<IntPoly>> = vec![None; self.len()];
        for h in (0..self.len()).rev() {
            let r = self.ranks[top] - self.ranks[h];
            if r == 0 {
                memo[h] = Some(IntPoly::one());
                continue;
            }
            let mu = self.mobius_from(h);
            let mut known = IntPoly::zero();
            for (g, upper) in memo.iter().enumerate().skip(h + 1) {
                if !self.leq(h, g) {
                    continue;
                }
                let chi = self.interval_char_poly_with(&mu, h, g);
                known += &(&chi * upper.as_ref().expect("upper intervals are filled first"));
            }
            memo[h] = Some(solve_mirrored(self.flats[h], r, &known)?);
        }
        Ok(memo.into_iter().map(|p| p.expect("every flat visited")).collect())
    }

    pub fn kl_poly(&self) -> Result<IntPoly, MatroidError> {
        Ok(self.upper_kl_polys()?.swap_remove(self.bottom()))
    }
}

/// Solves `t^r P(1/t) − P = K` for `P` of degree below `r/2`, reading each
/// coefficient from both ends of `K`.
fn solve_mirrored(flat: u32, r: usize, known: &IntPoly) -> Result<IntPoly, MatroidError> {
    let low_top = (r - 1) / 2;
    let mut coeffs = Vec::with_capacity(low_top + 1);
    for d in 0..=low_top {
        let from_low = -known.coeff(d);
        let from_high = known.coeff(r - d);
        if from_low != from_high {
            return Err(MatroidError::InconsistentRead {
                flat,
                rank: r,
                low: d,
                high: r - d,
                from_low: from_low.to_string(),
                from_high: from_high.to_string(),
            });
        }
        coeffs.push(from_low);
    }
    let top = known.degree().unwrap_or(0).max(r);
    for e in (low_top + 1..r - low_top).chain(r + 1..=top) {
        let c = known.coeff(e);
        if !c.is_zero() {
            return Err(MatroidError::GapCoefficient {
                flat,
                rank: r,
                exponent: e,
                value: c.to_string(),
            });
        }
    }
    Ok(IntPoly::from_coeffs(coeffs))
}

/// KL polynomial of a graphic matroid.
pub fn kl_poly(m: &GraphMatroid) -> Result<IntPoly, MatroidError> {
    m.flats().kl_poly()
}

/// Proper colorings of the graph with `q` colors, by brute force.
pub fn count_colorings(m: &GraphMatroid, q: usize) -> u64 {
    let v = m.vertices();
    let mut colors = vec![0usize; v];
    let mut count = 0;
    loop {
        if m.edges().iter().all(|&[a, b]| colors[a] != colors[b]) {
            count += 1;
        }
        let mut i = 0;
        while i < v {
            colors[i] += 1;
            if colors[i] < q {
                break;
            }
            colors[i] = 0;
            i += 1;
        }
        if i == v {
            return count;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn graph_sizes() {
        let g = thagomizer_graph(1);
        assert_eq!((g.num_edges(), g.full_rank()), (3, 2));
        let g = thagomizer_graph(4);
        assert_eq!((g.num_edges(), g.full_rank()), (9, 5));
        let g = cycle_graph(5);
        assert_eq!((g.num_edges(), g.full_rank()), (5, 4));
        let g = cycle_graph(2);
        assert_eq!((g.num_edges(), g.full_rank()), (2, 1));
        assert_eq!(g.rank(0), 0);
    }

    #[test]
    fn flat_counts() {
        assert_eq!(cycle_graph(3).flats().len(), 5);
        assert_eq!(cycle_graph(4).flats().len(), 12);
        assert_eq!(path_graph(2).flats().len(), 4);
        let lattice = cycle_graph(4).flats();
        assert_eq!(lattice.flats()[lattice.bottom()], 0);
        assert_eq!(lattice.flats()[lattice.top()], 0b1111);
    }

    #[test]
    fn flats_are_closed() {
        let g = thagomizer_graph(3);
        for &f in g.flats().flats() {
            assert_eq!(g.closure(f), f);
        }
    }

    #[test]
    fn characteristic_polynomials() {
        assert_eq!(cycle_graph(3).flats().char_poly(), poly(&[2, -3, 1]));
        assert_eq!(cycle_graph(4).flats().char_poly(), poly(&[-3, 6, -4, 1]));
        for r in 0..=5 {
            assert_eq!(path_graph(r).flats().char_poly(), poly(&[-1, 1]).pow(r), "r={r}");
        }
    }

    #[test]
    fn characteristic_polynomial_counts_colorings() {
        for g in [cycle_graph(4), thagomizer_graph(2), thagomizer_graph(3), path_graph(3)] {
            let chi = g.flats().char_poly();
            let c = g.components();
            for q in 1..=4usize {
                let value = chi.eval(&BigInt::from(q)) * BigInt::from(q).pow(c as u32);
                assert_eq!(value, BigInt::from(count_colorings(&g, q)), "{g:?} q={q}");
            }
        }
    }

    #[test]
    fn boolean_lattice_is_multiplicative_over_direct_sums() {
        let lattice = path_graph(4).flats();
        let top = lattice.top();
        for i in 0..lattice.len() {
            if lattice.leq(i, top) {
                let r = lattice.rank_of(top) - lattice.rank_of(i);
                assert_eq!(lattice.interval_char_poly(i, top), poly(&[-1, 1]).pow(r));
            }
        }
    }

    #[test]
    fn kl_values() {
        assert_eq!(kl_poly(&path_graph(0)).unwrap(), poly(&[1]));
        assert_eq!(kl_poly(&path_graph(3)).unwrap(), poly(&[1]));
        assert_eq!(kl_poly(&cycle_graph(3)).unwrap(), poly(&[1]));
        assert_eq!(kl_poly(&cycle_graph(4)).unwrap(), poly(&[1, 2]));
        assert_eq!(kl_poly(&thagomizer_graph(2)).unwrap(), poly(&[1, 1]));
    }

    #[test]
    fn solver_rejects_bad_right_side() {
        let err = solve_mirrored(0, 3, &poly(&[-1, 0, 0, 2])).unwrap_err();
        assert!(matches!(err, MatroidError::InconsistentRead { low: 0, high: 3, .. }));
        let err = solve_mirrored(0, 2, &poly(&[-1, 4, 1])).unwrap_err();
        assert!(matches!(err, MatroidError::GapCoefficient { exponent: 1, .. }));
    }

    #[test]
    fn json_input() {
        let g: GraphMatroid = serde_json::from_str(r#"{"vertices": 3, "edges": [[0,1],[1,2],[2,0]]}"#).unwrap();
        assert_eq!(g, cycle_graph(3));
        assert!(serde_json::from_str::<GraphMatroid>(r#"{"vertices": 2, "edges": [[0,2]]}"#).is_err());
        let many = format!(
            r#"{{"vertices": 2, "edges": [{}]}}"#,
            vec!["[0,1]"; MAX_EDGES + 1].join(",")
        );
        assert!(serde_json::from_str::<GraphMatroid>(&many).is_err());
    }

    proptest! {
        #[test]
        fn rank_is_submodular(a in 0u32..512, b in 0u32..512) {
            let g = thagomizer_graph(4);
            let (ra, rb) = (g.rank(a), g.rank(b));
            prop_assert!(g.rank(a | b) + g.rank(a & b) <= ra + rb);
            prop_assert!(g.rank(a | b) >= ra.max(rb));
            prop_assert!(ra <= a.count_ones() as usize);
        }
    }
}
