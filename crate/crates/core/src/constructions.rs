//! Constructive existence results and reduction machinery.
//!
//! This module builds plane spanning paths with prescribed endpoints or
//! starting edges, plane spanning cycles through two prescribed radial
//! edges, and composes flip sequences that reduce full flip-graph
//! connectivity questions to fixed-endpoint and fixed-start-edge ones.
//!
//! The reductions are conditional in general, so the composers take
//! oracles; the default oracles answer by breadth-first search over the
//! relevant restricted flip graphs and fail loudly — an oracle failure
//! would be a counterexample to the connectivity conjecture the reduction
//! rests on, never something to paper over.

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::enumeration::{build_flip_graph, enumerate_paths, Constraint, FlipFilter, FlipGraph, PathFamily};
use crate::error::{Error, Result};
use crate::geometry::{orient, Point, PointSet};
use crate::paths::{edge, Flip, FlipKind, FlipSequence, SpanningPath};

fn check_index(set: &PointSet, i: usize) -> Result<()> {
    if i >= set.len() {
        return Err(Error::IndexOutOfBounds(i, set.len()));
    }
    Ok(())
}

/// Convex hull neighbors `(ccw_prev, ccw_next)` of `v`, or None if `v` is
/// interior.
fn hull_neighbors(set: &PointSet, v: usize) -> Option<(usize, usize)> {
    let hull = set.convex_hull();
    let pos = hull.iter().position(|&h| h == v)?;
    let m = hull.len();
    Some((hull[(pos + m - 1) % m], hull[(pos + 1) % m]))
}

fn are_hull_consecutive(set: &PointSet, u: usize, v: usize) -> bool {
    match hull_neighbors(set, u) {
        Some((prev, next)) => v == prev || v == next,
        None => false,
    }
}

/// Is `uv` a viable starting edge — does some plane spanning path start
/// with it? Holds exactly when `u` or `v` is interior, or `u` and `v` are
/// consecutive on the convex hull.
pub fn viable_start_edge(set: &PointSet, u: usize, v: usize) -> bool {
    assert_ne!(u, v, "a starting edge needs two distinct vertices");
    !set.is_extreme(u) || !set.is_extreme(v) || are_hull_consecutive(set, u, v)
}

/// The points forming viable starting edges with a fixed anchor, arranged
/// in counterclockwise radial order around it.
///
/// The order is circular; for an extreme anchor the gap between its two
/// hull neighbors (through the exterior) contains no members, so they are
/// radially consecutive, matching the circular-order convention of the
/// start-edge rotation.
#[derive(Debug, Clone)]
pub struct ViableStartSet {
    anchor: usize,
    members: Vec<usize>,
}

impl ViableStartSet {
    /// Collects and radially sorts the viable partners of `anchor`.
    pub fn of(set: &PointSet, anchor: usize) -> Result<Self> {
        check_index(set, anchor)?;
        let members: Vec<usize> = (0..set.len())
            .filter(|&m| m != anchor && viable_start_edge(set, anchor, m))
            .collect();
        debug_assert!(!members.is_empty(), "hull neighbors are always viable");
        let start = members[0];
        let members = set.radial_order(set.point(anchor), &members, set.point(start))?;
        Ok(ViableStartSet { anchor, members })
    }

    /// The anchor vertex.
    pub fn anchor(&self) -> usize {
        self.anchor
    }

    /// Members in counterclockwise radial order (circular).
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    /// Number of members.
    pub fn len(&self) -> usize {
        self.members.len()
    }

    /// True when no member exists (never happens for n >= 3).
    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Is `v` a member?
    pub fn contains(&self, v: usize) -> bool {
        self.members.contains(&v)
    }

    /// The member counterclockwise-next after `m` (cyclically).
    pub fn next_after(&self, m: usize) -> Result<usize> {
        let pos = self
            .members
            .iter()
            .position(|&x| x == m)
            .ok_or_else(|| Error::StructureMismatch(format!(
                "{m} is not a viable start-edge partner of {}",
                self.anchor
            )))?;
        Ok(self.members[(pos + 1) % self.members.len()])
    }

    /// Are `q` and `r` adjacent in the circular order (either direction)?
    pub fn are_consecutive(&self, q: usize, r: usize) -> bool {
        match (self.members.iter().position(|&x| x == q), self.members.iter().position(|&x| x == r))
        {
            (Some(i), Some(j)) => {
                let m = self.members.len();
                (i + 1) % m == j || (j + 1) % m == i
            }
            _ => false,
        }
    }
}

// ---------------------------------------------------------------------------
// Exact rational machinery for the external-viewpoint construction.

#[derive(Clone)]
struct RatPoint {
    x: BigRational,
    y: BigRational,
}

fn rat(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

impl RatPoint {
    fn of(p: Point) -> Self {
        RatPoint { x: rat(p.x as i64), y: rat(p.y as i64) }
    }

    fn to(&self, p: Point) -> RatPoint {
        RatPoint { x: rat(p.x as i64) - &self.x, y: rat(p.y as i64) - &self.y }
    }
}

fn rat_cross(a: &RatPoint, b: &RatPoint) -> BigRational {
    &a.x * &b.y - &a.y * &b.x
}

/// The hull neighbor of extreme vertex `v` farther from `target` (squared
/// distance, ties to the smaller index).
fn far_hull_neighbor(set: &PointSet, v: usize, target: Point) -> usize {
    let (a, b) = hull_neighbors(set, v).expect("v is extreme");
    let d2 = |i: usize| {
        let p = set.point(i);
        let (dx, dy) = (p.x as i64 - target.x as i64, p.y as i64 - target.y as i64);
        dx * dx + dy * dy
    };
    match d2(a).cmp(&d2(b)) {
        std::cmp::Ordering::Greater => a,
        std::cmp::Ordering::Less => b,
        std::cmp::Ordering::Equal => a.min(b),
    }
}

/// Tangent frame at extreme vertex `v`: the direction `d` of the hull edge
/// from `anchor` to `v`, and the perpendicular `e` pointing to the hull
/// side, so that `2^k d + e` tilts the supporting line into the hull by
/// the exact factor `1/2^k`.
fn tilt_frame(set: &PointSet, v: usize, anchor: usize) -> ((i64, i64), (i64, i64)) {
    let (vp, ap) = (set.point(v), set.point(anchor));
    let d = (vp.x as i64 - ap.x as i64, vp.y as i64 - ap.y as i64);
    let witness = (0..set.len()).find(|&s| s != v && s != anchor).expect("n >= 3");
    let side = orient(ap, vp, set.point(witness));
    debug_assert_ne!(side, 0);
    let e = if side > 0 { (-d.1, d.0) } else { (d.1, -d.0) };
    (d, e)
}

/// The direction `2^k d + e`, a positive multiple of `d + e / 2^k`.
fn scaled_dir(d: (i64, i64), e: (i64, i64), k: usize) -> RatPoint {
    let s = BigRational::from_integer(BigInt::one() << k);
    RatPoint { x: &s * rat(d.0) + rat(e.0), y: &s * rat(d.1) + rat(e.1) }
}

/// Does the line through vertex `v` with direction `dir` leave all other
/// points strictly on one side?
fn admissible_dir(set: &PointSet, v: usize, dir: &RatPoint) -> bool {
    let vp = RatPoint::of(set.point(v));
    let mut sign = 0;
    for s in 0..set.len() {
        if s == v {
            continue;
        }
        let c = rat_cross(dir, &vp.to(set.point(s)));
        let cs = if c.is_positive() {
            1
        } else if c.is_negative() {
            -1
        } else {
            0
        };
        if cs == 0 || (sign != 0 && cs != sign) {
            return false;
        }
        sign = cs;
    }
    true
}

/// How far the supporting-line tilts are halved before giving up.
///
/// Tilts of `1/2^44` are always admissible (integer cross products are at
/// least 1 in absolute value and the perpendicular part contributes less
/// than `2^43` times the tilt), and for a fixed admissible line at `p` at
/// most `C(n,2) + 1` tilts at `q` are rejected, so the scans below always
/// succeed well within this limit.
const TILT_LIMIT: usize = 192;

/// Finds an exact external viewpoint for extreme `p`, `q` and returns all
/// vertex indices in radial order around it, starting at `p` and ending at
/// `q`.
///
/// The viewpoint is the intersection of two supporting lines through `p`
/// and `q` (anchored at their hull neighbors farther from the other
/// endpoint), each tilted towards the hull by an exact factor `1/2^k`.
/// The two tilts are chosen independently: the first admissible tilt at
/// `p` is fixed, then tilts at `q` are halved until the intersection point
/// is collinear with no two set points. Independence matters — the
/// viewpoint moves injectively along `p`'s line as `q`'s tilt varies, so
/// only finitely many tilts are bad, while coupled tilts can trace a
/// degenerate locus that stays collinear with the same two points forever.
fn external_sweep_order(set: &PointSet, p: usize, q: usize) -> Result<Vec<usize>> {
    let (pp, qq) = (set.point(p), set.point(q));
    let (dp, ep) = tilt_frame(set, p, far_hull_neighbor(set, p, qq));
    let (dq, eq) = tilt_frame(set, q, far_hull_neighbor(set, q, pp));

    let dir_p = (0..=TILT_LIMIT)
        .map(|k| scaled_dir(dp, ep, k))
        .find(|dir| admissible_dir(set, p, dir))
        .ok_or_else(|| {
            Error::StructureMismatch(format!("no admissible supporting line at {p}"))
        })?;

    for k in 0..=TILT_LIMIT {
        let dir_q = scaled_dir(dq, eq, k);
        if !admissible_dir(set, q, &dir_q) {
            continue;
        }
        let den = rat_cross(&dir_p, &dir_q);
        if den.is_zero() {
            continue;
        }
        let w = RatPoint { x: rat(qq.x as i64 - pp.x as i64), y: rat(qq.y as i64 - pp.y as i64) };
        let s = rat_cross(&w, &dir_q) / &den;
        let x = RatPoint { x: rat(pp.x as i64) + &s * &dir_p.x, y: rat(pp.y as i64) + &s * &dir_p.y };

        let rays: Vec<RatPoint> = (0..set.len()).map(|i| x.to(set.point(i))).collect();
        let distinct = (0..set.len())
            .all(|i| (i + 1..set.len()).all(|j| !rat_cross(&rays[i], &rays[j]).is_zero()));
        if !distinct {
            continue;
        }

        // The line through x and p is p's supporting line, so every other
        // ray lies strictly in the open half-plane on its hull side: all
        // rays fit in a half-turn and the cross-product sign is a strict
        // total order, with p and q (by the same argument at q) at the two
        // extremes.
        let mut order: Vec<usize> = (0..set.len()).collect();
        order.sort_by(|&i, &j| {
            if rat_cross(&rays[i], &rays[j]).is_positive() {
                std::cmp::Ordering::Less
            } else {
                std::cmp::Ordering::Greater
            }
        });
        if order[0] == q {
            order.reverse();
        }
        if order[0] == p && order[set.len() - 1] == q {
            return Ok(order);
        }
    }
    Err(Error::StructureMismatch(format!(
        "no external viewpoint found for endpoints {p} and {q}"
    )))
}

/// Builds a plane spanning path whose endpoints are exactly `p` and `q`
/// (in that orientation).
///
/// If one of the two is interior, the other points are connected in radial
/// order around it, ending at `q`. If both are extreme, all points are
/// connected in radial order around an exact external viewpoint from which
/// `p` comes first and `q` last.
pub fn path_with_endpoints(set: &PointSet, p: usize, q: usize) -> Result<SpanningPath> {
    check_index(set, p)?;
    check_index(set, q)?;
    if p == q {
        return Err(Error::StructureMismatch(
            "path endpoints must be two distinct vertices".into(),
        ));
    }
    let order = if !set.is_extreme(p) || !set.is_extreme(q) {
        // Radial construction around an interior endpoint.
        let (center, other, flipped) =
            if set.is_extreme(p) { (q, p, true) } else { (p, q, false) };
        let others: Vec<usize> = (0..set.len()).filter(|&i| i != center).collect();
        let ring = set.radial_order(set.point(center), &others, set.point(other))?;
        debug_assert_eq!(ring[0], other);
        let mut order = Vec::with_capacity(set.len());
        order.push(center);
        order.extend(&ring[1..]);
        order.push(ring[0]);
        if flipped {
            order.reverse();
        }
        order
    } else {
        external_sweep_order(set, p, q)?
    };
    let path = SpanningPath::new(set, order)?;
    debug_assert_eq!((path.first(), path.last()), (p, q));
    Ok(path)
}

/// Builds a plane spanning path that starts with the edge `u`,`v`.
///
/// Radial construction around `u` when `u` is interior or `u`,`v` are
/// hull-consecutive; otherwise (`u` extreme, `v` interior) the assembly of
/// two radial pieces around `u` joined by a hull arc.
pub fn path_from_start_edge(set: &PointSet, u: usize, v: usize) -> Result<SpanningPath> {
    check_index(set, u)?;
    check_index(set, v)?;
    if u == v {
        return Err(Error::StructureMismatch(
            "a starting edge needs two distinct vertices".into(),
        ));
    }
    if !viable_start_edge(set, u, v) {
        return Err(Error::StructureMismatch(format!(
            "{u}-{v} is not a viable starting edge"
        )));
    }

    let order = if !set.is_extreme(u) || are_hull_consecutive(set, u, v) {
        let others: Vec<usize> = (0..set.len()).filter(|&i| i != u).collect();
        if set.is_extreme(u) {
            // Sweep the cone at u from one hull neighbor to the other; when
            // v is the sweep's far end, read the sweep backwards.
            let (_, next) = hull_neighbors(set, u).expect("u is extreme");
            let mut ring = set.radial_order(set.point(u), &others, set.point(next))?;
            if v != next {
                ring.reverse();
            }
            debug_assert_eq!(ring[0], v);
            let mut order = vec![u];
            order.extend(ring);
            order
        } else {
            let ring = set.radial_order(set.point(u), &others, set.point(v))?;
            let mut order = vec![u];
            order.extend(ring);
            order
        }
    } else {
        // u extreme, v interior: radial pieces around u over the interior
        // points and u's hull neighbors, stitched along the far hull arc.
        let hull = set.convex_hull();
        let m = hull.len();
        let pos_u = hull.iter().position(|&h| h == u).expect("u is extreme");
        let (prev, next) = (hull[(pos_u + m - 1) % m], hull[(pos_u + 1) % m]);
        let sector: Vec<usize> = (0..set.len())
            .filter(|&i| i == prev || i == next || (i != u && !set.is_extreme(i)))
            .collect();
        let sweep = set.radial_order(set.point(u), &sector, set.point(next))?;
        debug_assert_eq!(*sweep.last().expect("nonempty"), prev);
        let j = sweep.iter().position(|&t| t == v).expect("v is interior");

        let mut order = vec![u];
        order.extend(&sweep[j..]);
        // Hull arc from prev back to next, skipping u.
        for step in 2..m - 1 {
            order.push(hull[(pos_u + m - step) % m]);
        }
        order.extend(&sweep[..j]);
        order
    };

    let path = SpanningPath::new(set, order)?;
    debug_assert_eq!((path.order()[0], path.order()[1]), (u, v));
    Ok(path)
}

/// A plane spanning cycle: a crossing-free closed tour of all vertices.
///
/// Stored in a normalized rotation (vertex 0 first, smaller neighbor
/// second) so equal cycles compare equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanningCycle {
    order: Vec<usize>,
}

impl SpanningCycle {
    /// Validates that `order` is a permutation of all vertices whose cyclic
    /// edges are pairwise non-crossing.
    pub fn new(set: &PointSet, order: Vec<usize>) -> Result<Self> {
        let n = set.len();
        if order.len() != n || n < 3 {
            return Err(Error::StructureMismatch(format!(
                "a spanning cycle needs all {n} vertices, got {}",
                order.len()
            )));
        }
        let mut seen = vec![false; n];
        for &v in &order {
            if v >= n {
                return Err(Error::IndexOutOfBounds(v, n));
            }
            if seen[v] {
                return Err(Error::NotAPermutation(n));
            }
            seen[v] = true;
        }
        for i in 0..n {
            let (a, b) = (order[i], order[(i + 1) % n]);
            for j in i + 1..n {
                let (c, d) = (order[j], order[(j + 1) % n]);
                if crate::geometry::segments_cross(
                    set.point(a),
                    set.point(b),
                    set.point(c),
                    set.point(d),
                ) {
                    return Err(Error::NotPlane(a, b, c, d));
                }
            }
        }

        // Normalize: vertex 0 first, then the smaller of its two cycle
        // neighbors.
        let z = order.iter().position(|&v| v == 0).expect("0 is spanned");
        let fwd: Vec<usize> = (0..n).map(|i| order[(z + i) % n]).collect();
        let bwd: Vec<usize> = (0..n).map(|i| order[(z + n - i) % n]).collect();
        Ok(SpanningCycle { order: if fwd[1] <= bwd[1] { fwd } else { bwd } })
    }

    /// The cyclic vertex order (normalized rotation).
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// Number of vertices.
    pub fn len(&self) -> usize {
        self.order.len()
    }

    /// True when the cycle has no vertices (never constructed).
    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// Does the cycle traverse edge `u`,`v`?
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let n = self.order.len();
        (0..n).any(|i| {
            let (a, b) = (self.order[i], self.order[(i + 1) % n]);
            edge(a, b) == edge(u, v)
        })
    }

    /// The spanning path obtained by deleting cycle edge `u`,`v`, oriented
    /// to start at `u`.
    pub fn path_without(&self, set: &PointSet, u: usize, v: usize) -> Result<SpanningPath> {
        if !self.has_edge(u, v) {
            return Err(Error::StructureMismatch(format!(
                "cycle {self} has no edge {u}-{v}"
            )));
        }
        let n = self.order.len();
        let i = self.order.iter().position(|&x| x == u).expect("u is spanned");
        // Walk away from v.
        let forward = self.order[(i + 1) % n] != v;
        let order: Vec<usize> = (0..n)
            .map(|k| self.order[if forward { (i + k) % n } else { (i + n - k) % n }])
            .collect();
        SpanningPath::new(set, order)
    }
}

impl std::fmt::Display for SpanningCycle {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "CYCLE:")?;
        for v in &self.order {
            write!(f, " {v}")?;
        }
        Ok(())
    }
}

/// Builds a plane spanning cycle containing the edges `v1`-`q` and
/// `v1`-`r`, for `q`, `r` radially consecutive in the viable start set of
/// `v1`.
pub fn cycle_with_two_edges(set: &PointSet, v1: usize, q: usize, r: usize) -> Result<SpanningCycle> {
    check_index(set, v1)?;
    check_index(set, q)?;
    check_index(set, r)?;
    let viable = ViableStartSet::of(set, v1)?;
    if !viable.are_consecutive(q, r) {
        return Err(Error::StructureMismatch(format!(
            "{q} and {r} are not radially consecutive viable partners of {v1}"
        )));
    }
    // Normalize so that r follows q counterclockwise.
    let (q, r) = if viable.next_after(q)? == r { (q, r) } else { (r, q) };

    let others: Vec<usize> = (0..set.len()).filter(|&i| i != v1).collect();
    let order = if !set.is_extreme(v1) {
        // Sweep all others counterclockwise from r; the sweep ends at q.
        let ring = set.radial_order(set.point(v1), &others, set.point(r))?;
        debug_assert_eq!(*ring.last().expect("nonempty"), q);
        let mut order = vec![v1];
        order.extend(ring);
        order
    } else {
        let hull = set.convex_hull();
        let m = hull.len();
        let pos_u = hull.iter().position(|&h| h == v1).expect("v1 is extreme");
        let (prev, next) = (hull[(pos_u + m - 1) % m], hull[(pos_u + 1) % m]);
        if edge(q, r) == edge(prev, next) {
            // The wrap pair: both hull neighbors; sweep the whole cone.
            let ring = set.radial_order(set.point(v1), &others, set.point(next))?;
            let mut order = vec![v1];
            order.extend(ring);
            order
        } else {
            // General extreme case; q, r consecutive in the interior sweep,
            // at least one of them interior.
            let sector: Vec<usize> = (0..set.len())
                .filter(|&i| i == prev || i == next || (i != v1 && !set.is_extreme(i)))
                .collect();
            let sweep = set.radial_order(set.point(v1), &sector, set.point(next))?;
            let j = sweep
                .iter()
                .position(|&t| t == q)
                .filter(|&a| sweep.get(a + 1) == Some(&r))
                .ok_or_else(|| {
                    Error::StructureMismatch(format!(
                        "{q} and {r} are not consecutive in the sweep around {v1}"
                    ))
                })?;
            // Down the sweep from q to its start (the counterclockwise hull
            // neighbor), along the far hull arc, then down from the sweep's
            // end to r; closing the tour adds the edges v1-q and r-v1.
            let mut order = vec![v1];
            order.extend(sweep[..=j].iter().rev());
            for step in 2..m - 1 {
                order.push(hull[(pos_u + step) % m]);
            }
            order.extend(sweep[j + 1..].iter().rev());
            order
        }
    };

    let cycle = SpanningCycle::new(set, order)?;
    debug_assert!(cycle.has_edge(v1, q) && cycle.has_edge(v1, r));
    Ok(cycle)
}

// ---------------------------------------------------------------------------
// Oracles and reductions.

/// Connects two paths sharing an ordered starting edge.
pub trait EdgeOracle {
    /// Returns a validated flip sequence from `a` to `b`; both must start
    /// with the same edge (as endpoint + neighbor, orientation-free).
    fn connect(&mut self, set: &PointSet, a: &SpanningPath, b: &SpanningPath)
        -> Result<FlipSequence>;
}

/// Connects two paths sharing the endpoint `p`.
pub trait StartOracle {
    /// Returns a validated flip sequence from `a` to `b`, both having
    /// endpoint `p`.
    fn connect(
        &mut self,
        set: &PointSet,
        p: usize,
        a: &SpanningPath,
        b: &SpanningPath,
    ) -> Result<FlipSequence>;
}

/// The vertex adjacent to endpoint `p` in `path`, if `p` is an endpoint.
fn neighbor_of_endpoint(path: &SpanningPath, p: usize) -> Option<usize> {
    if path.first() == p {
        Some(path.order()[1])
    } else if path.last() == p {
        Some(path.order()[path.len() - 2])
    } else {
        None
    }
}

/// The ordered starting edge `(p, second)` common to `a` and `b`.
fn shared_start_edge(a: &SpanningPath, b: &SpanningPath) -> Result<(usize, usize)> {
    for p in [a.first(), a.last()] {
        if let (Some(x), Some(y)) = (neighbor_of_endpoint(a, p), neighbor_of_endpoint(b, p)) {
            if x == y {
                return Ok((p, x));
            }
        }
    }
    Err(Error::StructureMismatch(format!(
        "paths {a} and {b} do not share a starting edge"
    )))
}

/// Reconstructs the unique flip between two flip-adjacent paths.
fn flip_between(from: &SpanningPath, to: &SpanningPath) -> Result<Flip> {
    let fe: BTreeSet<(usize, usize)> = from.edges().map(|(u, v)| edge(u, v)).collect();
    let te: BTreeSet<(usize, usize)> = to.edges().map(|(u, v)| edge(u, v)).collect();
    let removed: Vec<_> = fe.difference(&te).copied().collect();
    let added: Vec<_> = te.difference(&fe).copied().collect();
    if removed.len() != 1 || added.len() != 1 {
        return Err(Error::StructureMismatch(format!(
            "paths {from} and {to} do not differ by one flip"
        )));
    }
    // The kind annotation is resolved when the flip is applied.
    Ok(Flip::new(removed[0], added[0], FlipKind::Type1))
}

/// Converts a node walk in a family's flip graph into a validated flip
/// sequence starting at `start` (an orientation of the walk's first node).
fn walk_to_sequence(
    set: &PointSet,
    start: SpanningPath,
    family: &PathFamily,
    walk: &[u32],
) -> Result<FlipSequence> {
    let mut seq = FlipSequence::identity(start);
    for pair in walk.windows(2) {
        let flip = flip_between(family.member(pair[0]), family.member(pair[1]))?;
        seq.push(set, flip)?;
    }
    Ok(seq)
}

/// Default edge oracle: breadth-first search over the fixed-edge flip
/// graph, built once per starting edge and cached.
///
/// An oracle value is tied to the point set of its first use; do not reuse
/// it across sets.
#[derive(Default)]
pub struct BfsEdgeOracle {
    cache: HashMap<(usize, usize), (PathFamily, FlipGraph)>,
}

impl BfsEdgeOracle {
    /// A fresh oracle with an empty cache.
    pub fn new() -> Self {
        Self::default()
    }
}

impl EdgeOracle for BfsEdgeOracle {
    fn connect(
        &mut self,
        set: &PointSet,
        a: &SpanningPath,
        b: &SpanningPath,
    ) -> Result<FlipSequence> {
        let (p, second) = shared_start_edge(a, b)?;
        if !self.cache.contains_key(&(p, second)) {
            let family = enumerate_paths(set, &Constraint::FixedEdge(p, second))?;
            let graph = build_flip_graph(set, &family, FlipFilter::AllTypes);
            self.cache.insert((p, second), (family, graph));
        }
        let (family, graph) = &self.cache[&(p, second)];
        let find = |path: &SpanningPath| {
            family.id_of(path).ok_or_else(|| {
                Error::StructureMismatch(format!(
                    "{path} is not in the family with starting edge {p}-{second}"
                ))
            })
        };
        let walk = graph.shortest_path(find(a)?, find(b)?).ok_or_else(|| {
            Error::TheoremViolation(format!(
                "flip graph restricted to starting edge {p}-{second} is disconnected: \
                 no sequence from {a} to {b}"
            ))
        })?;
        walk_to_sequence(set, a.clone(), family, &walk)
    }
}

/// Connects two paths with the common endpoint `p` by rotating the start
/// edge radially, one viable partner at a time.
///
/// Each rotation stage asks the edge oracle to reach the rotation cycle
/// minus its forward radial edge, then swaps the two radial edges at `p`.
/// Every intermediate path keeps `p` as an endpoint, and the number of
/// stages is at most the number of viable partners minus one.
pub fn connect_fixed_start(
    set: &PointSet,
    p: usize,
    from: &SpanningPath,
    to: &SpanningPath,
    oracle: &mut dyn EdgeOracle,
) -> Result<FlipSequence> {
    check_index(set, p)?;
    for path in [from, to] {
        if neighbor_of_endpoint(path, p).is_none() {
            return Err(Error::StructureMismatch(format!(
                "{path} does not have {p} as an endpoint"
            )));
        }
    }
    let mut seq = FlipSequence::identity(from.clone());
    if from.canonical_key()? == to.canonical_key()? {
        return Ok(seq);
    }
    let target = neighbor_of_endpoint(to, p).expect("checked above");
    let viable = ViableStartSet::of(set, p)?;
    let mut stages = 0usize;
    loop {
        let second = neighbor_of_endpoint(seq.end(), p).expect("p stays an endpoint");
        if second == target {
            break;
        }
        stages += 1;
        if stages >= viable.len() {
            return Err(Error::StructureMismatch(format!(
                "start-edge rotation around {p} failed to reach {target}"
            )));
        }
        let vx = viable.next_after(second)?;
        let cycle = cycle_with_two_edges(set, p, second, vx)?;
        let mid = cycle.path_without(set, p, vx)?;
        let leg = oracle.connect(set, seq.end(), &mid)?;
        seq.extend(set, &leg)?;
        // The cycle is plane, so rejoining the endpoints is crossing-free.
        seq.push(set, Flip::new(edge(p, second), edge(p, vx), FlipKind::Type2))?;
    }
    let leg = oracle.connect(set, seq.end(), to)?;
    seq.extend(set, &leg)?;
    debug_assert!(seq.paths().iter().all(|path| neighbor_of_endpoint(path, p).is_some()));
    Ok(seq)
}

/// Start oracle that answers through `connect_fixed_start` with an inner
/// edge oracle.
#[derive(Default)]
pub struct RotationStartOracle<E: EdgeOracle> {
    /// The edge oracle consulted by every rotation stage.
    pub edge_oracle: E,
}

impl<E: EdgeOracle> RotationStartOracle<E> {
    /// Wraps an edge oracle.
    pub fn new(edge_oracle: E) -> Self {
        RotationStartOracle { edge_oracle }
    }
}

impl<E: EdgeOracle> StartOracle for RotationStartOracle<E> {
    fn connect(
        &mut self,
        set: &PointSet,
        p: usize,
        a: &SpanningPath,
        b: &SpanningPath,
    ) -> Result<FlipSequence> {
        connect_fixed_start(set, p, a, b, &mut self.edge_oracle)
    }
}

/// Connects any two plane spanning paths: directly through the start
/// oracle when they share an endpoint, and otherwise through a middle path
/// joining one endpoint of each.
pub fn connect_any(
    set: &PointSet,
    from: &SpanningPath,
    to: &SpanningPath,
    oracle: &mut dyn StartOracle,
) -> Result<FlipSequence> {
    if from.canonical_key()? == to.canonical_key()? {
        return Ok(FlipSequence::identity(from.clone()));
    }
    let (a1, a2) = from.endpoints();
    let (b1, b2) = to.endpoints();
    if let Some(p) = [a1, a2].into_iter().find(|&e| e == b1 || e == b2) {
        return oracle.connect(set, p, from, to);
    }
    let (va, vc) = (a1.min(a2), b1.min(b2));
    let mid = path_with_endpoints(set, va, vc)?;
    let mut seq = oracle.connect(set, va, from, &mid)?;
    let tail = oracle.connect(set, vc, &mid, to)?;
    seq.extend(set, &tail)?;
    Ok(seq)
}

/// `connect_fixed_start` with the default breadth-first edge oracle.
pub fn bfs_connect_fixed_start(
    set: &PointSet,
    p: usize,
    from: &SpanningPath,
    to: &SpanningPath,
) -> Result<FlipSequence> {
    connect_fixed_start(set, p, from, to, &mut BfsEdgeOracle::new())
}

/// `connect_any` with the default breadth-first oracles.
pub fn bfs_connect_any(set: &PointSet, from: &SpanningPath, to: &SpanningPath) -> Result<FlipSequence> {
    connect_any(set, from, to, &mut RotationStartOracle::new(BfsEdgeOracle::new()))
}
