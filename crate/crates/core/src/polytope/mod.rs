//! Vertex sets of `ψₙ` and of `φₙ`, the convex hull of the permutation
//! matrices that vertex permutations of `Kₙ` induce on its edges, together
//! with exact invariants used to compare the two.
//!
//! Every cloud built here consists of distinct 0/1 points. Those are vertices
//! of the unit cube and hence of their own convex hull, which is what makes
//! the midpoint test in [`is_edge`] valid.

pub mod linalg;
pub mod lp;

use num_traits::Zero;
use rayon::prelude::*;
use serde::{Serialize, Serializer};
use std::collections::{BTreeMap, HashSet};

use crate::caps::{check_cap, Caps};
use crate::error::{check_dim, Error, Result};
use crate::perm::{factorial, Permutation};
use crate::rational::{self, Rational};
use crate::tensor::{perm_matrix, vertex_point, Matrix};

/// The edges `{i, j}`, `i < j`, of `Kₙ` in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeIndex {
    n: usize,
    pairs: Vec<(usize, usize)>,
    lookup: Vec<usize>,
}

impl EdgeIndex {
    pub fn new(n: usize) -> Self {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        let mut lookup = vec![usize::MAX; n * n];
        for (k, &(i, j)) in pairs.iter().enumerate() {
            lookup[i * n + j] = k;
            lookup[j * n + i] = k;
        }
        EdgeIndex { n, pairs, lookup }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `N = n(n-1)/2`.
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn pair(&self, k: usize) -> (usize, usize) {
        self.pairs[k]
    }

    /// Index of the unordered pair `{i, j}`, `i ≠ j`.
    pub fn index(&self, i: usize, j: usize) -> usize {
        debug_assert_ne!(i, j);
        self.lookup[i * self.n + j]
    }
}

/// The permutation `Σ({i, j}) = {σ(i), σ(j)}` of the edge indices of `Kₙ`.
pub fn induced_perm(sigma: &Permutation) -> Permutation {
    induced_perm_with(&EdgeIndex::new(sigma.n()), sigma)
}

fn induced_perm_with(edges: &EdgeIndex, sigma: &Permutation) -> Permutation {
    let image = (0..edges.len())
        .map(|k| {
            let (i, j) = edges.pair(k);
            edges.index(sigma.apply(i), sigma.apply(j))
        })
        .collect();
    Permutation::from_image_unchecked(image)
}

/// The `N × N` permutation matrix of the induced edge permutation.
pub fn phi_vertex(sigma: &Permutation) -> Matrix {
    perm_matrix(&induced_perm(sigma))
}

/// Distinct points of equal dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointCloud {
    dim: usize,
    points: Vec<Vec<Rational>>,
}

impl PointCloud {
    /// Rejects duplicates and ragged input. Callers must ensure every point is
    /// a vertex of the hull for [`is_edge`] to be meaningful.
    pub fn new(dim: usize, points: Vec<Vec<Rational>>) -> Result<Self> {
        let mut seen = HashSet::new();
        for p in &points {
            check_dim(dim, p.len())?;
            if !seen.insert(p) {
                return Err(Error::invalid("point cloud contains duplicate points"));
            }
        }
        Ok(PointCloud { dim, points })
    }

    pub fn from_i64(points: &[&[i64]]) -> Result<Self> {
        let dim = points.first().map_or(0, |p| p.len());
        Self::new(dim, points.iter().map(|p| p.iter().map(|&v| rational::int(v)).collect()).collect())
    }

    /// Keeps the first copy of each point.
    fn dedup(dim: usize, points: impl IntoIterator<Item = Vec<Rational>>) -> Self {
        let mut seen = HashSet::new();
        let points = points.into_iter().filter(|p| seen.insert(p.clone())).collect();
        PointCloud { dim, points }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Vec<Rational>] {
        &self.points
    }

    /// JSON array of points, each an array of `"p/q"` strings.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("cloud serialization cannot fail")
    }

    /// Coordinates on which not all points agree.
    fn varying_coordinates(&self) -> Vec<usize> {
        let Some(first) = self.points.first() else {
            return Vec::new();
        };
        (0..self.dim).filter(|&d| self.points.iter().any(|p| p[d] != first[d])).collect()
    }
}

impl Serialize for PointCloud {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> =
            self.points.iter().map(|p| p.iter().map(rational::format_rational).collect()).collect();
        rows.serialize(s)
    }
}

/// The `n!` points `P ⊗ P` in dimension `n⁴`, in lexicographic order of `σ`.
pub fn psi_vertices(n: usize, caps: &Caps) -> Result<PointCloud> {
    check_cap("psi_vertices", n, caps.cloud)?;
    let points = Permutation::all(n).map(|s| vertex_point(&s, &s)).collect::<Result<Vec<_>>>()?;
    PointCloud::new(n.pow(4), points)
}

/// Flattened `phi_vertex(σ)` for all `σ`, duplicates dropped. For `n ≥ 3`
/// the map `σ ↦ Σ` is injective and the cloud has `n!` points; `φ₂` is a
/// single point.
pub fn phi_vertices(n: usize, caps: &Caps) -> Result<PointCloud> {
    check_cap("phi_vertices", n, caps.cloud)?;
    if n < 2 {
        return Err(Error::invalid("phi_n needs n >= 2"));
    }
    let edges = EdgeIndex::new(n);
    let big_n = edges.len();
    let points = Permutation::all(n).map(|s| {
        let induced = induced_perm_with(&edges, &s);
        let mut flat = vec![Rational::zero(); big_n * big_n];
        for k in 0..big_n {
            flat[k * big_n + induced.apply(k)] = rational::one();
        }
        flat
    });
    Ok(PointCloud::dedup(big_n * big_n, points))
}

/// Dimension of the affine hull: the rank of `{p - p₀}`.
pub fn affine_dimension(cloud: &PointCloud) -> Result<usize> {
    let Some(base) = cloud.points.first() else {
        return Err(Error::invalid("affine dimension of an empty cloud"));
    };
    let coords = cloud.varying_coordinates();
    let rows = cloud.points[1..]
        .iter()
        .map(|p| coords.iter().map(|&d| &p[d] - &base[d]).collect())
        .collect();
    Ok(linalg::rank(rows))
}

/// Whether `[p_u, p_v]` is an edge of the hull: true iff the midpoint is not a
/// convex combination of the remaining points.
pub fn is_edge(cloud: &PointCloud, u: usize, v: usize) -> Result<bool> {
    let len = cloud.len();
    if u >= len || v >= len {
        return Err(Error::invalid(format!("vertex index out of range for a cloud of {len} points")));
    }
    if u == v {
        return Err(Error::invalid("is_edge needs two distinct vertices"));
    }
    let coords = cloud.varying_coordinates();
    Ok(!lp::feasible(midpoint_system(cloud, &coords, u, v)))
}

/// Rows `Σ_k λ_k p_k[d] = m[d]` for each varying coordinate `d`, then
/// `Σ_k λ_k = 1`, over the points other than `u` and `v`. Identical rows are
/// kept once.
fn midpoint_system(cloud: &PointCloud, coords: &[usize], u: usize, v: usize) -> Vec<Vec<Rational>> {
    let others: Vec<&Vec<Rational>> =
        cloud.points.iter().enumerate().filter(|&(k, _)| k != u && k != v).map(|(_, p)| p).collect();
    let half = rational::ratio(1, 2);
    let (pu, pv) = (&cloud.points[u], &cloud.points[v]);
    let mut seen = HashSet::new();
    let mut rows = Vec::with_capacity(coords.len() + 1);
    for &d in coords {
        let mut row: Vec<Rational> = others.iter().map(|p| p[d].clone()).collect();
        row.push((&pu[d] + &pv[d]) * &half);
        if seen.insert(row.clone()) {
            rows.push(row);
        }
    }
    let mut convex: Vec<Rational> = vec![rational::one(); others.len()];
    convex.push(rational::one());
    rows.push(convex);
    rows
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AdjacencyReport {
    pub vertex_count: usize,
    pub pairs_tested: usize,
    /// Pairs `(u, v)`, `u < v`, that are not hull edges. 0-based in memory,
    /// 1-based in JSON.
    #[serde(serialize_with = "one_based_pairs")]
    pub non_edges: Vec<(usize, usize)>,
    pub is_complete_graph: bool,
}

fn one_based_pairs<S: Serializer>(pairs: &[(usize, usize)], s: S) -> Result<S::Ok, S::Error> {
    pairs.iter().map(|&(u, v)| (u + 1, v + 1)).collect::<Vec<_>>().serialize(s)
}

/// Runs [`is_edge`] on every unordered pair. The cloud may have at most
/// `caps.adjacency!` points.
pub fn graph_complete(cloud: &PointCloud, caps: &Caps, threads: usize) -> Result<AdjacencyReport> {
    let limit = factorial(caps.adjacency);
    if cloud.len() > limit {
        return Err(Error::CapExceeded { what: "graph_complete (cloud size)", n: cloud.len(), cap: limit });
    }
    let pairs: Vec<(usize, usize)> =
        (0..cloud.len()).flat_map(|u| (u + 1..cloud.len()).map(move |v| (u, v))).collect();
    let test = |&(u, v): &(usize, usize)| is_edge(cloud, u, v).map(|edge| (!edge).then_some((u, v)));
    let results: Vec<Option<(usize, usize)>> = if threads > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| Error::invalid(format!("thread pool: {e}")))?;
        pool.install(|| pairs.par_iter().map(test).collect::<Result<_>>())?
    } else {
        pairs.iter().map(test).collect::<Result<_>>()?
    };
    let non_edges: Vec<(usize, usize)> = results.into_iter().flatten().collect();
    Ok(AdjacencyReport {
        vertex_count: cloud.len(),
        pairs_tested: pairs.len(),
        is_complete_graph: non_edges.is_empty(),
        non_edges,
    })
}

/// Multiset of squared Euclidean distances over unordered pairs.
pub fn distance_spectrum(cloud: &PointCloud) -> BTreeMap<Rational, usize> {
    let mut spectrum = BTreeMap::new();
    for (k, p) in cloud.points.iter().enumerate() {
        for q in &cloud.points[k + 1..] {
            let d = p.iter().zip(q).fold(Rational::zero(), |acc, (a, b)| {
                let diff = a - b;
                acc + &diff * &diff
            });
            *spectrum.entry(d).or_insert(0) += 1;
        }
    }
    spectrum
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpectrumEntry {
    #[serde(with = "rational::as_string")]
    pub squared_distance: Rational,
    pub count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexGraphSummary {
    pub pairs_tested: usize,
    pub edges: usize,
    pub non_edges: usize,
    pub complete: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CloudInvariants {
    pub vertex_count: usize,
    pub ambient_dimension: usize,
    pub affine_dimension: usize,
    pub distance_spectrum: Vec<SpectrumEntry>,
    /// Present when the cloud is within the adjacency cap.
    pub vertex_graph: Option<VertexGraphSummary>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantLabel {
    pub invariant: &'static str,
    pub constrains: &'static str,
}

/// Side-by-side invariants of `ψₙ` and `φₙ`. Evidence only: matching values
/// do not establish an isomorphism, and each invariant is labelled with the
/// notion of isomorphism it constrains.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub n: usize,
    pub psi: CloudInvariants,
    pub phi: CloudInvariants,
    /// `φₙ` has fewer than `n!` vertices (only at `n = 2`).
    pub degenerate: bool,
    pub equal_vertex_counts: bool,
    pub equal_affine_dimensions: bool,
    /// Distance multiplicities agree after sorting by distance.
    pub same_spectrum_multiplicities: bool,
    pub labels: Vec<InvariantLabel>,
}

fn cloud_invariants(cloud: &PointCloud, caps: &Caps, threads: usize, with_graph: bool) -> Result<CloudInvariants> {
    let vertex_graph = if with_graph {
        let r = graph_complete(cloud, caps, threads)?;
        Some(VertexGraphSummary {
            pairs_tested: r.pairs_tested,
            edges: r.pairs_tested - r.non_edges.len(),
            non_edges: r.non_edges.len(),
            complete: r.is_complete_graph,
        })
    } else {
        None
    };
    Ok(CloudInvariants {
        vertex_count: cloud.len(),
        ambient_dimension: cloud.dim(),
        affine_dimension: affine_dimension(cloud)?,
        distance_spectrum: distance_spectrum(cloud)
            .into_iter()
            .map(|(squared_distance, count)| SpectrumEntry { squared_distance, count })
            .collect(),
        vertex_graph,
    })
}

pub fn compare_invariants(n: usize, caps: &Caps, threads: usize) -> Result<InvariantReport> {
    check_cap("compare_invariants", n, caps.cloud)?;
    if n < 2 {
        return Err(Error::invalid("compare_invariants needs n >= 2"));
    }
    let with_graph = n <= caps.adjacency;
    let psi = cloud_invariants(&psi_vertices(n, caps)?, caps, threads, with_graph)?;
    let phi = cloud_invariants(&phi_vertices(n, caps)?, caps, threads, with_graph)?;
    let multiplicities = |c: &CloudInvariants| c.distance_spectrum.iter().map(|e| e.count).collect::<Vec<_>>();
    Ok(InvariantReport {
        n,
        degenerate: phi.vertex_count < factorial(n),
        equal_vertex_counts: psi.vertex_count == phi.vertex_count,
        equal_affine_dimensions: psi.affine_dimension == phi.affine_dimension,
        same_spectrum_multiplicities: multiplicities(&psi) == multiplicities(&phi),
        labels: vec![
            InvariantLabel { invariant: "vertex_count", constrains: "combinatorial and affine isomorphism" },
            InvariantLabel { invariant: "affine_dimension", constrains: "combinatorial and affine isomorphism" },
            InvariantLabel { invariant: "vertex_graph", constrains: "combinatorial and affine isomorphism" },
            InvariantLabel {
                invariant: "distance_spectrum",
                constrains: "isometry only (up to scaling); not preserved by affine or combinatorial isomorphism",
            },
            InvariantLabel { invariant: "ambient_dimension", constrains: "none (depends on the embedding)" },
        ],
        psi,
        phi,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn perm(image: &[usize]) -> Permutation {
        Permutation::new(image.to_vec()).unwrap()
    }

    #[test]
    fn edge_index_order() {
        let e = EdgeIndex::new(4);
        assert_eq!(e.len(), 6);
        assert_eq!((e.pair(0), e.pair(2), e.pair(5)), ((0, 1), (0, 3), (2, 3)));
        assert_eq!(e.index(3, 1), 4);
    }

    #[test]
    fn induced_examples() {
        assert!(induced_perm(&Permutation::identity(4)).is_identity());
        // e0={0,1}, e1={0,2}, e2={1,2}
        assert_eq!(induced_perm(&perm(&[1, 2, 0])).image(), &[2, 0, 1]);
        assert_eq!(induced_perm(&perm(&[1, 0, 2])).image(), &[0, 2, 1]);
    }

    #[test]
    fn phi_vertex_examples() {
        assert_eq!(phi_vertex(&Permutation::identity(4)), Matrix::identity(6));
        assert_eq!(phi_vertex(&perm(&[1, 2, 0])), perm_matrix(&perm(&[2, 0, 1])));
        for n in [3, 4] {
            let distinct: HashSet<Matrix> = Permutation::all(n).map(|s| phi_vertex(&s)).collect();
            assert_eq!(distinct.len(), factorial(n));
        }
    }

    #[test]
    fn clouds() {
        let caps = Caps::default();
        let psi2 = psi_vertices(2, &caps).unwrap();
        assert_eq!((psi2.len(), psi2.dim()), (2, 16));
        let psi3 = psi_vertices(3, &caps).unwrap();
        let phi3 = phi_vertices(3, &caps).unwrap();
        assert_eq!((psi3.len(), phi3.len()), (6, 6));
        for p in psi3.points() {
            assert!(p.iter().all(|x| *x == int(0) || *x == int(1)));
            assert_eq!(p.iter().filter(|x| **x == int(1)).count(), 9);
        }
        assert_eq!(phi_vertices(2, &caps).unwrap().len(), 1);
        assert!(psi_vertices(6, &caps).is_err());
        assert!(phi_vertices(1, &caps).is_err());
    }

    #[test]
    fn affine_dimension_examples() {
        assert_eq!(affine_dimension(&PointCloud::from_i64(&[&[1, 2]]).unwrap()).unwrap(), 0);
        assert_eq!(affine_dimension(&PointCloud::from_i64(&[&[1, 2], &[3, 5]]).unwrap()).unwrap(), 1);
        assert_eq!(affine_dimension(&psi_vertices(2, &Caps::default()).unwrap()).unwrap(), 1);
        let square = PointCloud::from_i64(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]).unwrap();
        assert_eq!(affine_dimension(&square).unwrap(), 2);
    }

    #[test]
    fn is_edge_examples() {
        let triangle = PointCloud::from_i64(&[&[0, 0], &[1, 0], &[0, 1]]).unwrap();
        for (u, v) in [(0, 1), (0, 2), (1, 2)] {
            assert!(is_edge(&triangle, u, v).unwrap());
        }
        let square = PointCloud::from_i64(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]).unwrap();
        assert!(!is_edge(&square, 0, 3).unwrap());
        assert!(!is_edge(&square, 1, 2).unwrap());
        assert!(is_edge(&square, 0, 1).unwrap());
        assert!(is_edge(&psi_vertices(2, &Caps::default()).unwrap(), 0, 1).unwrap());
        assert!(is_edge(&square, 0, 4).is_err());
        assert!(is_edge(&square, 1, 1).is_err());
    }

    #[test]
    fn square_is_not_complete() {
        let square = PointCloud::from_i64(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]).unwrap();
        let r = graph_complete(&square, &Caps::default(), 1).unwrap();
        assert_eq!((r.pairs_tested, r.non_edges.clone(), r.is_complete_graph), (6, vec![(0, 3), (1, 2)], false));
    }

    #[test]
    fn phi3_is_complete() {
        let r = graph_complete(&phi_vertices(3, &Caps::default()).unwrap(), &Caps::default(), 1).unwrap();
        assert_eq!((r.pairs_tested, r.is_complete_graph), (15, true));
    }

    #[test]
    fn spectra() {
        let caps = Caps::default();
        let psi3 = distance_spectrum(&psi_vertices(3, &caps).unwrap());
        assert_eq!(psi3.into_iter().collect::<Vec<_>>(), vec![(int(16), 9), (int(18), 6)]);
        let phi3 = distance_spectrum(&phi_vertices(3, &caps).unwrap());
        assert_eq!(phi3.into_iter().collect::<Vec<_>>(), vec![(int(4), 9), (int(6), 6)]);
        assert_eq!(distance_spectrum(&PointCloud::from_i64(&[&[0, 0], &[3, 4]]).unwrap()).len(), 1);
    }

    #[test]
    fn compare_small() {
        let caps = Caps::default();
        let r = compare_invariants(3, &caps, 1).unwrap();
        assert_eq!((r.psi.vertex_count, r.phi.vertex_count), (6, 6));
        assert!(r.same_spectrum_multiplicities && !r.degenerate);
        assert!(r.phi.vertex_graph.as_ref().unwrap().complete);
        let r = compare_invariants(2, &caps, 1).unwrap();
        assert!(r.degenerate);
        assert_eq!((r.psi.vertex_count, r.phi.vertex_count, r.phi.affine_dimension), (2, 1, 0));
    }

    #[test]
    fn cloud_rejects_duplicates() {
        assert!(PointCloud::from_i64(&[&[0, 1], &[0, 1]]).is_err());
        assert!(PointCloud::new(2, vec![vec![int(0)]]).is_err());
        assert_eq!(PointCloud::from_i64(&[&[0], &[1]]).unwrap().to_json(), r#"[["0"],["1"]]"#);
    }
}
