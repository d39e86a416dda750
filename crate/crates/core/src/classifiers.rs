//! Structural classification of point sets.
//!
//! * convex position,
//! * wheel sets: exactly one interior point,
//! * generalized double circles: every hull edge carries a convex chain of
//!   interior points such that each line through two chain members keeps
//!   all other points strictly on the far side ([`find_gdc_decomposition`]),
//! * spinal sets: sets admitting an uncrossed spanning cycle (a *spine*).
//!
//! Every chain-decomposable set is spinal: walking the chains in hull order
//! traverses an uncrossed spanning cycle. For other sets a spine is
//! searched exhaustively (guarded by a size limit).

use std::fmt;

use crate::geometry::{convex_hull_indices, orient, segments_cross, Point, PointSet};
use crate::{Error, Result};

/// Largest point set for which the exhaustive spine search runs.
pub const MAX_SPINE_SEARCH: usize = 16;

/// One chain of a generalized double circle: the two hull vertices `p`, `q`
/// of a hull edge together with the interior points assigned to that edge,
/// ordered along the chain from `p` to `q`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Chain {
    /// Hull vertex the chain starts at.
    pub p: usize,
    /// Hull vertex the chain ends at.
    pub q: usize,
    /// All chain members, ordered from `p` to `q` (inclusive).
    pub members: Vec<usize>,
}

impl Chain {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Chain members other than the two hull vertices.
    pub fn interior(&self) -> &[usize] {
        &self.members[1..self.members.len() - 1]
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.contains(&v)
    }
}

/// A decomposition of a point set into chains, one per hull edge.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ChainDecomposition {
    hull: Vec<usize>,
    chains: Vec<Chain>,
}

impl ChainDecomposition {
    /// Hull indices, counterclockwise.
    pub fn hull(&self) -> &[usize] {
        &self.hull
    }

    /// Chains in hull order; chain `k` spans the hull edge from `hull[k]`
    /// to `hull[k+1]` (cyclically).
    pub fn chains(&self) -> &[Chain] {
        &self.chains
    }

    /// The chains containing `v`: two for hull vertices, one for interior
    /// points.
    pub fn chains_of(&self, v: usize) -> Vec<usize> {
        (0..self.chains.len()).filter(|&c| self.chains[c].contains(v)).collect()
    }

    /// A chain containing both `u` and `v`, if any.
    pub fn common_chain(&self, u: usize, v: usize) -> Option<usize> {
        (0..self.chains.len()).find(|&c| self.chains[c].contains(u) && self.chains[c].contains(v))
    }

    /// The spanning cycle obtained by walking all chains in hull order.
    pub fn spine(&self) -> Spine {
        let mut cycle = Vec::new();
        for chain in &self.chains {
            // Skip the terminal hull vertex; the next chain starts with it.
            cycle.extend_from_slice(&chain.members[..chain.members.len() - 1]);
        }
        Spine::normalized(cycle)
    }
}

impl fmt::Display for ChainDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for chain in &self.chains {
            write!(f, "CHAIN {} {}:", chain.p, chain.q)?;
            for v in &chain.members {
                write!(f, " {v}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// An uncrossed spanning cycle, stored with vertex `0` first and the
/// smaller of its two neighbors second.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Spine {
    cycle: Vec<usize>,
}

impl Spine {
    /// Validates that `cycle` is a spanning cycle of `set` with pairwise
    /// non-crossing edges, and normalizes its start and direction.
    pub fn new(set: &PointSet, cycle: Vec<usize>) -> Result<Self> {
        let n = set.len();
        if n < 3 {
            return Err(Error::TooFewPoints { need: 3, got: n });
        }
        if cycle.len() != n {
            return Err(Error::NotAPermutation(n));
        }
        let mut seen = vec![false; n];
        for &v in &cycle {
            if v >= n || seen[v] {
                return Err(Error::NotAPermutation(n));
            }
            seen[v] = true;
        }
        for i in 0..n {
            let (a, b) = (cycle[i], cycle[(i + 1) % n]);
            for j in i + 1..n {
                let (c, d) = (cycle[j], cycle[(j + 1) % n]);
                if segments_cross(set.point(a), set.point(b), set.point(c), set.point(d)) {
                    return Err(Error::NotPlane(a, b, c, d));
                }
            }
        }
        Ok(Spine::normalized(cycle))
    }

    pub(crate) fn normalized(cycle: Vec<usize>) -> Self {
        let n = cycle.len();
        let pos = cycle.iter().position(|&v| v == 0).unwrap_or(0);
        let fwd: Vec<usize> = (0..n).map(|i| cycle[(pos + i) % n]).collect();
        let bwd: Vec<usize> = (0..n).map(|i| cycle[(pos + n - i) % n]).collect();
        Spine { cycle: if fwd <= bwd { fwd } else { bwd } }
    }

    pub fn len(&self) -> usize {
        self.cycle.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycle.is_empty()
    }

    /// Cycle vertices; consecutive entries (and last-to-first) are edges.
    pub fn cycle(&self) -> &[usize] {
        &self.cycle
    }

    /// Position of vertex `v` in the stored cycle order.
    pub fn position(&self, v: usize) -> usize {
        self.cycle.iter().position(|&x| x == v).expect("spine spans all vertices")
    }

    /// Is `u v` a spine edge?
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let n = self.cycle.len();
        let i = self.position(u);
        self.cycle[(i + 1) % n] == v || self.cycle[(i + n - 1) % n] == v
    }

    /// The two cycle neighbors of `v`, in stored direction (previous, next).
    pub fn neighbors(&self, v: usize) -> (usize, usize) {
        let n = self.cycle.len();
        let i = self.position(v);
        (self.cycle[(i + n - 1) % n], self.cycle[(i + 1) % n])
    }

    /// Cyclic distance: the smaller number of spine edges between `u` and
    /// `v`.
    pub fn distance(&self, u: usize, v: usize) -> usize {
        let n = self.cycle.len();
        let (i, j) = (self.position(u), self.position(v));
        let d = (i + n - j) % n;
        d.min(n - d)
    }
}

impl fmt::Display for Spine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SPINE:")?;
        for v in &self.cycle {
            write!(f, " {v}")?;
        }
        Ok(())
    }
}

/// Class labels of a point set.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, serde::Serialize)]
pub struct ClassLabels {
    /// All points extreme.
    pub convex: bool,
    /// Exactly one interior point (and at least four points).
    pub wheel: bool,
    /// Admits a chain decomposition.
    pub gdc: bool,
    /// Admits an uncrossed spanning cycle.
    pub spinal: bool,
}

/// Classification result with certificates.
#[derive(Clone, Debug)]
pub struct Classification {
    pub labels: ClassLabels,
    /// Chain decomposition, when one exists.
    pub gdc: Option<ChainDecomposition>,
    /// An uncrossed spanning cycle, when one exists.
    pub spine: Option<Spine>,
}

/// Classifies `set`: convex / wheel / chain-decomposable / spinal, with
/// certificates for the latter two.
///
/// The spine search for non-decomposable sets is exhaustive and therefore
/// guarded: such sets above [`MAX_SPINE_SEARCH`] points are rejected.
pub fn classify(set: &PointSet) -> Result<Classification> {
    let n = set.len();
    if n < 3 {
        return Err(Error::TooFewPoints { need: 3, got: n });
    }
    let hull = set.convex_hull();
    let convex = hull.len() == n;
    let wheel = n >= 4 && hull.len() == n - 1;
    let gdc = find_gdc_decomposition(set);
    let spine = match &gdc {
        Some(dec) => Some(dec.spine()),
        None => find_spine(set)?,
    };
    Ok(Classification {
        labels: ClassLabels { convex, wheel, gdc: gdc.is_some(), spinal: spine.is_some() },
        gdc,
        spine,
    })
}

/// The wheel structure of a set with exactly one interior point.
#[derive(Clone, Debug)]
pub struct WheelStructure {
    /// The interior point.
    pub center: usize,
    /// Hull indices, counterclockwise.
    pub hull: Vec<usize>,
}

/// Edge classes on a wheel set.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum WheelEdge {
    /// Between the center and a hull vertex.
    Radial,
    /// Between consecutive hull vertices.
    Boundary,
    /// Between non-consecutive hull vertices.
    Inner,
}

impl WheelStructure {
    /// Extracts the wheel structure, failing on sets that are not wheels.
    pub fn of(set: &PointSet) -> Result<Self> {
        let n = set.len();
        let hull = set.convex_hull();
        if n < 4 || hull.len() != n - 1 {
            return Err(Error::StructureMismatch(format!(
                "wheel set needs exactly one interior point; hull has {} of {} points",
                hull.len(),
                n
            )));
        }
        let center = (0..n).find(|v| !hull.contains(v)).unwrap();
        Ok(WheelStructure { center, hull })
    }

    /// Classifies the undirected edge `u v`.
    pub fn edge_kind(&self, u: usize, v: usize) -> WheelEdge {
        if u == self.center || v == self.center {
            return WheelEdge::Radial;
        }
        let h = self.hull.len();
        let i = self.hull.iter().position(|&x| x == u).expect("hull vertex");
        let j = self.hull.iter().position(|&x| x == v).expect("hull vertex");
        if (i + 1) % h == j || (j + 1) % h == i {
            WheelEdge::Boundary
        } else {
            WheelEdge::Inner
        }
    }

    /// Are `u` and `v` consecutive hull vertices?
    pub fn hull_consecutive(&self, u: usize, v: usize) -> bool {
        u != self.center && v != self.center && self.edge_kind(u, v) == WheelEdge::Boundary
    }
}

/// Searches for a chain decomposition: an assignment of every interior
/// point to a hull edge such that each edge's points form a convex chain
/// and every line through two chain members keeps all non-chain points
/// strictly on the side away from the hull edge.
///
/// Interior points are tried against candidate edges in hull order, so the
/// first decomposition found is deterministic. Returns `None` when no
/// decomposition exists.
pub fn find_gdc_decomposition(set: &PointSet) -> Option<ChainDecomposition> {
    let n = set.len();
    if n < 3 {
        return None;
    }
    let hull = set.convex_hull();
    let h = hull.len();
    let interior: Vec<usize> = (0..n).filter(|v| !hull.contains(v)).collect();

    // Candidate edges per interior point: z can only join the chain of the
    // hull edge (p, q) when every other extreme point lies strictly on the
    // far side of both lines z-p and z-q.
    let mut candidates: Vec<Vec<usize>> = Vec::with_capacity(interior.len());
    for &z in &interior {
        let cand: Vec<usize> = (0..h)
            .filter(|&e| hull_compatible(set, &hull, z, hull[e], hull[(e + 1) % h]))
            .collect();
        if cand.is_empty() {
            return None;
        }
        candidates.push(cand);
    }

    let mut assignment = vec![usize::MAX; interior.len()];
    if !assign(set, &hull, &interior, &candidates, 0, &mut assignment) {
        return None;
    }
    let chains: Vec<Chain> = (0..h)
        .map(|e| {
            let members: Vec<usize> = interior
                .iter()
                .zip(&assignment)
                .filter(|&(_, &a)| a == e)
                .map(|(&z, _)| z)
                .collect();
            build_chain(set, hull[e], hull[(e + 1) % h], &members)
        })
        .collect();
    Some(ChainDecomposition { hull, chains })
}

/// Necessary condition for `z` joining the chain of hull edge `(p, q)`:
/// every other extreme point lies strictly opposite `q` across the line
/// `z p`, and strictly opposite `p` across the line `z q`.
fn hull_compatible(set: &PointSet, hull: &[usize], z: usize, p: usize, q: usize) -> bool {
    let (zp, pp, qp) = (set.point(z), set.point(p), set.point(q));
    let side_q = orient(zp, pp, qp);
    let side_p = orient(zp, qp, pp);
    for &e in hull {
        if e == p || e == q {
            continue;
        }
        let ep = set.point(e);
        if orient(zp, pp, ep) != -side_q || orient(zp, qp, ep) != -side_p {
            return false;
        }
    }
    true
}

fn assign(
    set: &PointSet,
    hull: &[usize],
    interior: &[usize],
    candidates: &[Vec<usize>],
    at: usize,
    assignment: &mut Vec<usize>,
) -> bool {
    if at == interior.len() {
        return verify_assignment(set, hull, interior, assignment);
    }
    for &e in &candidates[at] {
        assignment[at] = e;
        if assign(set, hull, interior, candidates, at + 1, assignment) {
            return true;
        }
    }
    assignment[at] = usize::MAX;
    false
}

fn verify_assignment(set: &PointSet, hull: &[usize], interior: &[usize], assignment: &[usize]) -> bool {
    let h = hull.len();
    for e in 0..h {
        let members: Vec<usize> = interior
            .iter()
            .zip(assignment)
            .filter(|&(_, &a)| a == e)
            .map(|(&z, _)| z)
            .collect();
        let chain = build_chain(set, hull[e], hull[(e + 1) % h], &members);
        if !chain_is_valid(set, &chain) {
            return false;
        }
    }
    true
}

/// Orders `members` (interior points assigned to the hull edge `p q`) into
/// a chain from `p` to `q`. The members of a valid chain are in convex
/// position with `p q` an edge of their hull, so the chain order is the
/// other hull walk from `p` to `q`; candidate sets for which this fails are
/// ordered arbitrarily and rejected by the validity check.
fn build_chain(set: &PointSet, p: usize, q: usize, members: &[usize]) -> Chain {
    let mut all: Vec<usize> = Vec::with_capacity(members.len() + 2);
    all.push(p);
    all.push(q);
    all.extend_from_slice(members);
    let pts: Vec<Point> = all.iter().map(|&v| set.point(v)).collect();
    let local_hull = convex_hull_indices(&pts);
    if local_hull.len() != all.len() {
        return fallback_chain(p, q, members);
    }
    let h = local_hull.len();
    let ip = local_hull.iter().position(|&i| i == 0).expect("p participates in its own hull");
    // Walk from p away from the direct p-q hull edge.
    let walk: Vec<usize> = if h > 2 && local_hull[(ip + 1) % h] == 1 {
        (0..h).map(|i| local_hull[(ip + h - i) % h]).collect()
    } else {
        (0..h).map(|i| local_hull[(ip + i) % h]).collect()
    };
    if *walk.last().unwrap() != 1 {
        return fallback_chain(p, q, members);
    }
    Chain { p, q, members: walk.into_iter().map(|i| all[i]).collect() }
}

fn fallback_chain(p: usize, q: usize, members: &[usize]) -> Chain {
    let mut m = vec![p];
    m.extend_from_slice(members);
    m.push(q);
    Chain { p, q, members: m }
}

/// Full chain validity: members in convex position from `p` to `q`, and
/// every line through two chain members keeps all non-members strictly on
/// the side containing neither `p` nor `q`.
fn chain_is_valid(set: &PointSet, chain: &Chain) -> bool {
    let k = chain.members.len();
    if k < 2 || chain.members[0] != chain.p || chain.members[k - 1] != chain.q {
        return false;
    }
    let pts: Vec<Point> = chain.members.iter().map(|&v| set.point(v)).collect();
    if convex_hull_indices(&pts).len() != k {
        return false;
    }
    let (pp, qp) = (set.point(chain.p), set.point(chain.q));
    for i in 0..k {
        for j in i + 1..k {
            let (a, b) = (pts[i], pts[j]);
            let (sp, sq) = (orient(a, b, pp), orient(a, b, qp));
            if sp * sq < 0 {
                // p and q straddle the line: no half-plane avoids both.
                return false;
            }
            let near = if sp != 0 { sp } else { sq };
            if near == 0 {
                // The line through p and q: a hull edge of the whole set,
                // so all other points share one side already.
                continue;
            }
            for v in 0..set.len() {
                if chain.contains(v) {
                    continue;
                }
                if orient(a, b, set.point(v)) != -near {
                    return false;
                }
            }
        }
    }
    true
}

/// An edge is *uncrossed* when no other edge spanned by two points of the
/// set crosses it. Returns the adjacency matrix of uncrossed edges.
pub fn uncrossed_edges(set: &PointSet) -> Vec<Vec<bool>> {
    let n = set.len();
    let mut ok = vec![vec![false; n]; n];
    for u in 0..n {
        for v in u + 1..n {
            let mut crossed = false;
            'outer: for c in 0..n {
                for d in c + 1..n {
                    if segments_cross(set.point(u), set.point(v), set.point(c), set.point(d)) {
                        crossed = true;
                        break 'outer;
                    }
                }
            }
            ok[u][v] = !crossed;
            ok[v][u] = !crossed;
        }
    }
    ok
}

/// Searches for an uncrossed spanning cycle: a Hamiltonian cycle within the
/// globally uncrossed edges. Chain-decomposable sets get their chain-union
/// spine directly; otherwise a backtracking search runs, guarded by
/// [`MAX_SPINE_SEARCH`].
pub fn find_spine(set: &PointSet) -> Result<Option<Spine>> {
    let n = set.len();
    if n < 3 {
        return Err(Error::TooFewPoints { need: 3, got: n });
    }
    if let Some(dec) = find_gdc_decomposition(set) {
        return Ok(Some(dec.spine()));
    }
    if n > MAX_SPINE_SEARCH {
        return Err(Error::TooLarge { got: n, limit: MAX_SPINE_SEARCH });
    }
    let ok = uncrossed_edges(set);
    // Every vertex needs two uncrossed edges to sit on a cycle.
    for v in 0..n {
        if (0..n).filter(|&w| ok[v][w]).count() < 2 {
            return Ok(None);
        }
    }
    let mut cycle = vec![0usize];
    let mut used = vec![false; n];
    used[0] = true;
    if uncrossed_cycle_dfs(&ok, n, &mut cycle, &mut used) {
        Ok(Some(Spine::normalized(cycle)))
    } else {
        Ok(None)
    }
}

fn uncrossed_cycle_dfs(ok: &[Vec<bool>], n: usize, cycle: &mut Vec<usize>, used: &mut [bool]) -> bool {
    let last = *cycle.last().unwrap();
    if cycle.len() == n {
        // Break direction symmetry and close the cycle.
        return cycle[1] < cycle[n - 1] && ok[last][cycle[0]];
    }
    for w in 1..n {
        if used[w] || !ok[last][w] {
            continue;
        }
        cycle.push(w);
        used[w] = true;
        if uncrossed_cycle_dfs(ok, n, cycle, used) {
            return true;
        }
        cycle.pop();
        used[w] = false;
    }
    false
}

/// True iff every triangle formed by a cycle edge and a third point of the
/// set is empty. Sets admitting such a cycle are necessarily in convex
/// position, which makes this a useful structural litmus test.
pub fn empty_triangle_convexity_check(set: &PointSet, spine: &Spine) -> bool {
    let n = set.len();
    let cycle = spine.cycle();
    for i in 0..n {
        let (u, v) = (cycle[i], cycle[(i + 1) % n]);
        for w in 0..n {
            if w != u && w != v && !set.triangle_empty(u, v, w) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pset(raw: &[(i32, i32)]) -> PointSet {
        PointSet::new(raw.iter().map(|&(x, y)| Point::new(x, y)).collect()).unwrap()
    }

    /// Square with an interior point near the bottom edge.
    fn w5() -> PointSet {
        pset(&[(0, 0), (4, 0), (4, 4), (0, 4), (2, 1)])
    }

    /// Double circle on eight points: a square and one interior point
    /// hugging each square edge.
    fn dc8() -> PointSet {
        pset(&[
            (0, 0),
            (10, 0),
            (10, 10),
            (0, 10),
            (5, 1),
            (9, 5),
            (5, 9),
            (1, 5),
        ])
    }

    #[test]
    fn labels_of_basic_shapes() {
        let convex = pset(&[(0, 0), (4, 0), (4, 4), (0, 4)]);
        let c = classify(&convex).unwrap();
        assert!(c.labels.convex && !c.labels.wheel && c.labels.gdc && c.labels.spinal);

        let c = classify(&w5()).unwrap();
        assert!(!c.labels.convex && c.labels.wheel && c.labels.gdc && c.labels.spinal);

        let c = classify(&dc8()).unwrap();
        assert!(!c.labels.convex && !c.labels.wheel && c.labels.gdc && c.labels.spinal);

        // Pentagon with a central interior point: a wheel, but neither
        // chain-decomposable nor spinal (every radial edge is crossed).
        let wheel = pset(&[(0, 0), (10, 1), (12, 9), (5, 14), (-2, 8), (5, 7)]);
        let c = classify(&wheel).unwrap();
        assert!(c.labels.wheel && !c.labels.gdc && !c.labels.spinal);
    }

    #[test]
    fn w5_decomposition_and_spine() {
        let s = w5();
        let dec = find_gdc_decomposition(&s).unwrap();
        assert_eq!(dec.hull(), &[0, 1, 2, 3]);
        assert_eq!(dec.chains().len(), 4);
        let c0 = &dec.chains()[0];
        assert_eq!((c0.p, c0.q), (0, 1));
        assert_eq!(c0.members, vec![0, 4, 1]);
        assert_eq!(c0.interior(), &[4]);
        for c in &dec.chains()[1..] {
            assert_eq!(c.len(), 2);
        }
        let spine = dec.spine();
        assert_eq!(spine, Spine::new(&s, vec![0, 4, 1, 2, 3]).unwrap());
        assert_eq!(spine.cycle(), &[0, 3, 2, 1, 4]);
        assert_eq!(spine.to_string(), "SPINE: 0 3 2 1 4");
        // Chain membership queries.
        assert_eq!(dec.chains_of(4), vec![0]);
        assert_eq!(dec.chains_of(1), vec![0, 1]);
        assert_eq!(dec.common_chain(0, 4), Some(0));
        assert_eq!(dec.common_chain(4, 2), None);
    }

    #[test]
    fn dc8_decomposition() {
        let s = dc8();
        let dec = find_gdc_decomposition(&s).unwrap();
        assert_eq!(dec.chains().len(), 4);
        for c in dec.chains() {
            assert_eq!(c.len(), 3, "every square edge carries one interior point");
        }
        let spine = dec.spine();
        assert_eq!(spine.cycle(), &[0, 4, 1, 5, 2, 6, 3, 7]);
        assert_eq!(spine.distance(0, 1), 2);
        assert_eq!(spine.distance(0, 2), 4);
        assert_eq!(spine.distance(0, 7), 1);
        assert_eq!(spine.neighbors(0), (7, 4));
        assert!(spine.has_edge(0, 4));
        assert!(!spine.has_edge(0, 1));
        // A chain spine on a non-convex set always has some occupied
        // edge triangle.
        assert!(!empty_triangle_convexity_check(&s, &spine));
    }

    #[test]
    fn central_wheel_is_neither_decomposable_nor_spinal() {
        // Interior point roughly central: no hull edge passes the
        // compatibility filter, and every radial edge is crossed by some
        // hull chord, so no uncrossed spanning cycle exists either.
        let s = pset(&[(0, 0), (10, 1), (12, 9), (5, 14), (-2, 8), (5, 7)]);
        assert!(find_gdc_decomposition(&s).is_none());
        assert!(find_spine(&s).unwrap().is_none());
        let uncrossed = uncrossed_edges(&s);
        for hull_vertex in 0..5 {
            assert!(!uncrossed[5][hull_vertex], "radial to {hull_vertex} is crossed");
        }
    }

    #[test]
    fn convex_sets_decompose_into_trivial_chains() {
        let s = pset(&[(2, 0), (5, 1), (6, 4), (2, 7), (0, 3)]);
        let dec = find_gdc_decomposition(&s).unwrap();
        assert!(dec.chains().iter().all(|c| c.len() == 2));
        assert_eq!(dec.spine().cycle(), &[0, 1, 2, 3, 4]);
    }

    #[test]
    fn spine_validation_rejects_crossings() {
        let s = pset(&[(0, 0), (4, 0), (4, 4), (0, 4)]);
        assert!(Spine::new(&s, vec![0, 1, 2, 3]).is_ok());
        assert!(matches!(Spine::new(&s, vec![0, 2, 1, 3]), Err(Error::NotPlane(..))));
        assert!(matches!(Spine::new(&s, vec![0, 1, 2, 2]), Err(Error::NotAPermutation(_))));
    }

    #[test]
    fn spine_normalization_is_orientation_free() {
        let s = dc8();
        let a = Spine::new(&s, vec![0, 4, 1, 5, 2, 6, 3, 7]).unwrap();
        let b = Spine::new(&s, vec![5, 1, 4, 0, 7, 3, 6, 2]).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn wheel_structure_and_edge_kinds() {
        let s = w5();
        let w = WheelStructure::of(&s).unwrap();
        assert_eq!(w.center, 4);
        assert_eq!(w.hull, vec![0, 1, 2, 3]);
        assert_eq!(w.edge_kind(4, 2), WheelEdge::Radial);
        assert_eq!(w.edge_kind(0, 1), WheelEdge::Boundary);
        assert_eq!(w.edge_kind(3, 0), WheelEdge::Boundary);
        assert_eq!(w.edge_kind(0, 2), WheelEdge::Inner);
        assert!(w.hull_consecutive(1, 2));
        assert!(!w.hull_consecutive(1, 3));
        // Not a wheel: zero interior points.
        let convex = pset(&[(0, 0), (4, 0), (4, 4), (0, 4)]);
        assert!(WheelStructure::of(&convex).is_err());
    }

    #[test]
    fn empty_triangle_check_certifies_convexity() {
        // Convex pentagon: every hull-edge triangle is empty.
        let s = pset(&[(2, 0), (5, 1), (6, 4), (2, 7), (0, 3)]);
        let spine = find_spine(&s).unwrap().unwrap();
        assert!(empty_triangle_convexity_check(&s, &spine));
        // W5 is spinal, but the triangle of hull edge 3-0 and vertex 1
        // contains the interior point.
        let s = w5();
        let spine = find_spine(&s).unwrap().unwrap();
        assert!(!empty_triangle_convexity_check(&s, &spine));
    }
}
