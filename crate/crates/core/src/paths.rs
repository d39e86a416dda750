//! Plane spanning paths and the flip operation.
//!
//! A spanning path visits every point of a [`PointSet`] exactly once; it is
//! *plane* when no two of its straight-line edges cross. A *flip* removes
//! one edge and adds one edge so that the result is again a plane spanning
//! path. With path `v_1, ..., v_n` and removed edge `v_{i-1} v_i`, the added
//! edge is one of:
//!
//! * `v_1 v_i` or `v_{i-1} v_n` — a chunk of the path is reversed in place
//!   (**Type 1**),
//! * `v_1 v_n` where the new edge crosses no path edge — the path plus
//!   `v_1 v_n` is a plane cycle, and the removed edge may be *any* cycle
//!   edge (**Type 2**),
//! * `v_1 v_n` where the new edge crosses exactly one path edge, which must
//!   be the removed one (**Type 3**).
//!
//! Edges added between the two path ends are always labelled Type 2 or
//! Type 3 here, even for removals that also fit the Type 1 formula; the
//! predicate [`Flip::reverses_chunk`] identifies the flips realizable as
//! chunk reversals (removed and added edge share a vertex), which is the
//! right notion for restricting a flip graph to Type-1 moves.

use std::collections::HashSet;
use std::fmt;

use crate::geometry::{segments_cross, PointSet};
use crate::{Error, Result};

/// Largest path length for which packed canonical keys are available.
pub const MAX_KEY_LEN: usize = 16;

/// Normalizes an undirected edge to `(min, max)`.
pub fn edge(u: usize, v: usize) -> (usize, usize) {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Is `order` a permutation of `0..set.len()` whose edges are pairwise
/// non-crossing?
pub fn is_plane_path(set: &PointSet, order: &[usize]) -> bool {
    let n = set.len();
    if order.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &v in order {
        if v >= n || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    for i in 0..n.saturating_sub(1) {
        for j in i + 2..n - 1 {
            if segments_cross(
                set.point(order[i]),
                set.point(order[i + 1]),
                set.point(order[j]),
                set.point(order[j + 1]),
            ) {
                return false;
            }
        }
    }
    true
}

/// Packed identity of an unoriented path: the smaller of the two packed
/// vertex sequences (forward and reversed), four bits per vertex.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct PathKey(pub u64);

impl PathKey {
    /// Recovers the vertex sequence of length `n` encoded in this key.
    pub fn decode(self, n: usize) -> Vec<usize> {
        let mut out = vec![0usize; n];
        let mut bits = self.0;
        for slot in (0..n).rev() {
            out[slot] = (bits & 0xF) as usize;
            bits >>= 4;
        }
        out
    }
}

/// A validated plane spanning path, stored as an oriented vertex sequence.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SpanningPath {
    order: Vec<usize>,
}

impl SpanningPath {
    /// Validates `order` against `set`: permutation, then planarity.
    pub fn new(set: &PointSet, order: Vec<usize>) -> Result<Self> {
        let n = set.len();
        if n == 0 {
            return Err(Error::TooFewPoints { need: 1, got: 0 });
        }
        if order.len() != n {
            return Err(Error::NotAPermutation(n));
        }
        let mut seen = vec![false; n];
        for &v in &order {
            if v >= n || seen[v] {
                return Err(Error::NotAPermutation(n));
            }
            seen[v] = true;
        }
        for i in 0..n - 1 {
            for j in i + 2..n.saturating_sub(1) {
                if segments_cross(
                    set.point(order[i]),
                    set.point(order[i + 1]),
                    set.point(order[j]),
                    set.point(order[j + 1]),
                ) {
                    return Err(Error::NotPlane(order[i], order[i + 1], order[j], order[j + 1]));
                }
            }
        }
        Ok(SpanningPath { order })
    }

    /// Wraps an order that is already known to be a plane spanning path.
    pub(crate) fn new_unchecked(set: &PointSet, order: Vec<usize>) -> Self {
        debug_assert!(is_plane_path(set, &order));
        let _ = set;
        SpanningPath { order }
    }

    /// Parses a space-separated vertex sequence and validates it.
    pub fn parse(set: &PointSet, text: &str) -> Result<Self> {
        let order: Vec<usize> = text
            .split_whitespace()
            .map(|tok| tok.parse::<usize>().map_err(|e| Error::Parse(format!("bad vertex index {tok:?}: {e}"))))
            .collect::<Result<_>>()?;
        SpanningPath::new(set, order)
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn first(&self) -> usize {
        self.order[0]
    }

    pub fn last(&self) -> usize {
        *self.order.last().unwrap()
    }

    /// Both endpoints, in path orientation.
    pub fn endpoints(&self) -> (usize, usize) {
        (self.first(), self.last())
    }

    /// The path with its orientation reversed (same unoriented path).
    pub fn reversed(&self) -> Self {
        let mut order = self.order.clone();
        order.reverse();
        SpanningPath { order }
    }

    /// Path edges in order, unnormalized.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.order.windows(2).map(|w| (w[0], w[1]))
    }

    /// Does the path contain the undirected edge `u v`?
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges().any(|(a, b)| edge(a, b) == edge(u, v))
    }

    /// Position `k` such that the undirected edge equals
    /// `(order[k], order[k+1])`, if present.
    pub fn edge_position(&self, u: usize, v: usize) -> Option<usize> {
        self.edges().position(|(a, b)| edge(a, b) == edge(u, v))
    }

    /// Orientation-independent identity, packed four bits per vertex.
    pub fn canonical_key(&self) -> Result<PathKey> {
        let n = self.order.len();
        if n > MAX_KEY_LEN {
            return Err(Error::TooLarge { got: n, limit: MAX_KEY_LEN });
        }
        let mut fwd: u64 = 0;
        let mut rev: u64 = 0;
        for i in 0..n {
            fwd = (fwd << 4) | self.order[i] as u64;
            rev = (rev << 4) | self.order[n - 1 - i] as u64;
        }
        Ok(PathKey(fwd.min(rev)))
    }
}

impl fmt::Display for SpanningPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.order.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// The three flip shapes.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, serde::Serialize, serde::Deserialize)]
pub enum FlipKind {
    /// Chunk reversal: added edge is `v_1 v_i` or `v_{i-1} v_n`.
    Type1,
    /// Added edge `v_1 v_n` crosses nothing; path plus `v_1 v_n` is a plane
    /// cycle and any cycle edge may be removed.
    Type2,
    /// Added edge `v_1 v_n` crosses exactly the removed edge.
    Type3,
}

impl fmt::Display for FlipKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FlipKind::Type1 => write!(f, "1"),
            FlipKind::Type2 => write!(f, "2"),
            FlipKind::Type3 => write!(f, "3"),
        }
    }
}

/// One flip: an edge to remove and an edge to add, with its shape label.
///
/// Equality and hashing use only the unordered edge pair; the label is an
/// annotation (the same pair never arises with two different labels on one
/// path, but sequences built on different paths stay comparable).
#[derive(Clone, Copy, Debug)]
pub struct Flip {
    removed: (usize, usize),
    added: (usize, usize),
    kind: FlipKind,
}

impl Flip {
    pub fn new(removed: (usize, usize), added: (usize, usize), kind: FlipKind) -> Self {
        Flip { removed: edge(removed.0, removed.1), added: edge(added.0, added.1), kind }
    }

    pub fn removed(&self) -> (usize, usize) {
        self.removed
    }

    pub fn added(&self) -> (usize, usize) {
        self.added
    }

    pub fn kind(&self) -> FlipKind {
        self.kind
    }

    /// The reverse move: undoes this flip on the flipped path.
    /// Shape labels are preserved under reversal.
    pub fn inverse(&self) -> Flip {
        Flip { removed: self.added, added: self.removed, kind: self.kind }
    }

    /// Do the removed and added edge share a vertex? Exactly the flips that
    /// reverse a single chunk of the path in place, i.e. the flips
    /// realizable as Type-1 moves regardless of their label.
    pub fn reverses_chunk(&self) -> bool {
        let (a, b) = self.removed;
        let (c, d) = self.added;
        a == c || a == d || b == c || b == d
    }
}

impl PartialEq for Flip {
    fn eq(&self, other: &Self) -> bool {
        self.removed == other.removed && self.added == other.added
    }
}

impl Eq for Flip {}

impl std::hash::Hash for Flip {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.removed.hash(state);
        self.added.hash(state);
    }
}

impl fmt::Display for Flip {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "-({},{}) +({},{}) [type {}]",
            self.removed.0, self.removed.1, self.added.0, self.added.1, self.kind
        )
    }
}

/// All flips of `path`, in deterministic order: by position of the removed
/// edge, and per position the `v_1 v_i` reconnection, then `v_{i-1} v_n`,
/// then the end-joining edge `v_1 v_n`.
pub fn enumerate_flips(set: &PointSet, path: &SpanningPath) -> Vec<Flip> {
    enumerate_flips_with_results(set, path).into_iter().map(|(f, _)| f).collect()
}

/// As [`enumerate_flips`], but paired with the flipped paths.
pub fn enumerate_flips_with_results(
    set: &PointSet,
    path: &SpanningPath,
) -> Vec<(Flip, SpanningPath)> {
    let o = path.order();
    let n = o.len();
    let mut out = Vec::new();
    if n < 3 {
        return out;
    }

    // A candidate edge is valid iff it crosses none of the surviving path
    // edges; the survivors were pairwise non-crossing already, so this is
    // equivalent to re-testing planarity of the whole flipped path.
    let crosses_surviving = |u: usize, v: usize, skip: usize| -> bool {
        for (k, (a, b)) in path.edges().enumerate() {
            if k == skip {
                continue;
            }
            if segments_cross(set.point(u), set.point(v), set.point(a), set.point(b)) {
                return true;
            }
        }
        false
    };

    // Positions of path edges crossed by the potential end-joining edge.
    let joiner_crossings: Vec<usize> = path
        .edges()
        .enumerate()
        .filter(|&(_, (a, b))| {
            segments_cross(set.point(o[0]), set.point(o[n - 1]), set.point(a), set.point(b))
        })
        .map(|(k, _)| k)
        .collect();

    for k in 0..n - 1 {
        let removed = (o[k], o[k + 1]);
        if (1..=n - 3).contains(&k) {
            // Reverse the prefix: v_1 .. v_{i-1} flips around, v_1 v_i added.
            if !crosses_surviving(o[0], o[k + 1], k) {
                let mut order: Vec<usize> = o[..=k].iter().rev().copied().collect();
                order.extend_from_slice(&o[k + 1..]);
                out.push((
                    Flip::new(removed, (o[0], o[k + 1]), FlipKind::Type1),
                    SpanningPath::new_unchecked(set, order),
                ));
            }
            // Reverse the suffix: v_i .. v_n flips around, v_{i-1} v_n added.
            if !crosses_surviving(o[k], o[n - 1], k) {
                let mut order: Vec<usize> = o[..=k].to_vec();
                order.extend(o[k + 1..].iter().rev().copied());
                out.push((
                    Flip::new(removed, (o[k], o[n - 1]), FlipKind::Type1),
                    SpanningPath::new_unchecked(set, order),
                ));
            }
        }
        // End-joining edge: valid when it crosses no surviving edge, i.e.
        // its crossings are contained in {k}.
        let join_ok = match joiner_crossings.as_slice() {
            [] => true,
            [only] => *only == k,
            _ => false,
        };
        if join_ok {
            let kind = if joiner_crossings.is_empty() { FlipKind::Type2 } else { FlipKind::Type3 };
            let mut order: Vec<usize> = o[..=k].iter().rev().copied().collect();
            order.extend(o[k + 1..].iter().rev().copied());
            out.push((
                Flip::new(removed, (o[0], o[n - 1]), kind),
                SpanningPath::new_unchecked(set, order),
            ));
        }
    }
    out
}

/// Applies `flip` to `path`, validating that it is one of the path's legal
/// flips (matched by its edge pair; the label is not consulted).
pub fn apply_flip(set: &PointSet, path: &SpanningPath, flip: &Flip) -> Result<SpanningPath> {
    for (cand, result) in enumerate_flips_with_results(set, path) {
        if cand == *flip {
            return Ok(result);
        }
    }
    Err(Error::InvalidFlip(format!("{flip} does not apply to path {path}")))
}

/// A validated sequence of flips: `paths` has one more entry than `flips`,
/// and each flip transforms its predecessor into its successor.
#[derive(Clone, Debug)]
pub struct FlipSequence {
    paths: Vec<SpanningPath>,
    flips: Vec<Flip>,
}

impl FlipSequence {
    /// The empty sequence at `start`.
    pub fn identity(start: SpanningPath) -> Self {
        FlipSequence { paths: vec![start], flips: Vec::new() }
    }

    /// Replays `flips` from `start`, validating every step.
    pub fn replay(set: &PointSet, start: SpanningPath, flips: Vec<Flip>) -> Result<Self> {
        let mut seq = FlipSequence::identity(start);
        for (step, flip) in flips.into_iter().enumerate() {
            seq.push(set, flip).map_err(|e| Error::InvalidSequence { step, reason: e.to_string() })?;
        }
        Ok(seq)
    }

    /// Appends one flip, validating it against the current end path.
    ///
    /// The stored flip is the matching enumerated one, so its kind label is
    /// always authoritative even if the caller's annotation was a guess.
    pub fn push(&mut self, set: &PointSet, flip: Flip) -> Result<()> {
        for (cand, result) in enumerate_flips_with_results(set, self.end()) {
            if cand == flip {
                self.flips.push(cand);
                self.paths.push(result);
                return Ok(());
            }
        }
        Err(Error::InvalidFlip(format!("{flip} does not apply to path {}", self.end())))
    }

    /// Appends `other`, which must start at this sequence's end path
    /// (as an unoriented path).
    pub fn extend(&mut self, set: &PointSet, other: &FlipSequence) -> Result<()> {
        let here = self.end().canonical_key()?;
        let there = other.start().canonical_key()?;
        if here != there {
            return Err(Error::InvalidSequence {
                step: self.len(),
                reason: format!(
                    "cannot concatenate: sequence ends at {} but continuation starts at {}",
                    self.end(),
                    other.start()
                ),
            });
        }
        for flip in &other.flips {
            self.push(set, *flip)?;
        }
        Ok(())
    }

    /// The same connection walked backwards, using inverse flips.
    pub fn reversed(&self, set: &PointSet) -> Result<FlipSequence> {
        let mut seq = FlipSequence::identity(self.end().clone());
        for flip in self.flips.iter().rev() {
            seq.push(set, flip.inverse())?;
        }
        Ok(seq)
    }

    pub fn len(&self) -> usize {
        self.flips.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flips.is_empty()
    }

    pub fn start(&self) -> &SpanningPath {
        &self.paths[0]
    }

    pub fn end(&self) -> &SpanningPath {
        self.paths.last().unwrap()
    }

    pub fn flips(&self) -> &[Flip] {
        &self.flips
    }

    /// All intermediate paths, including start and end.
    pub fn paths(&self) -> &[SpanningPath] {
        &self.paths
    }
}

impl fmt::Display for FlipSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.paths[0])?;
        for (flip, path) in self.flips.iter().zip(&self.paths[1..]) {
            writeln!(f, "  {flip}")?;
            writeln!(f, "{path}")?;
        }
        Ok(())
    }
}

/// Expresses a Type-2 flip that removes the edge at position `i-1` as `i-1`
/// single-chunk flips that walk around the underlying plane cycle: step `t`
/// removes the `t`-th original edge and adds back the cycle edge currently
/// missing (which joins the current endpoints). Every intermediate path is
/// the cycle minus one edge, and every step satisfies
/// [`Flip::reverses_chunk`].
pub fn simulate_type2_by_type1(
    set: &PointSet,
    path: &SpanningPath,
    flip: &Flip,
) -> Result<FlipSequence> {
    let listed = enumerate_flips(set, path);
    let Some(actual) = listed.iter().find(|c| *c == flip) else {
        return Err(Error::InvalidFlip(format!("{flip} does not apply to path {path}")));
    };
    if actual.kind() != FlipKind::Type2 {
        return Err(Error::InvalidFlip(format!("{flip} is not a Type 2 flip of {path}")));
    }
    let k = path
        .edge_position(actual.removed().0, actual.removed().1)
        .expect("validated flip removes a path edge");

    // Edges of the plane cycle formed by the path plus the end-joining edge.
    let o = path.order();
    let n = o.len();
    let mut cycle_edges: HashSet<(usize, usize)> = path.edges().map(|(a, b)| edge(a, b)).collect();
    cycle_edges.insert(edge(o[0], o[n - 1]));

    let mut seq = FlipSequence::identity(path.clone());
    for t in 0..=k {
        let (first, last) = seq.end().endpoints();
        // The endpoints of the current path span the missing cycle edge.
        let step = Flip::new((o[t], o[t + 1]), (first, last), FlipKind::Type2);
        seq.push(set, step)?;
        // Invariant: we never leave the cycle.
        for (a, b) in seq.end().edges() {
            debug_assert!(cycle_edges.contains(&edge(a, b)));
        }
        debug_assert!(seq.flips().last().unwrap().reverses_chunk());
    }

    let target = apply_flip(set, path, actual)?;
    if seq.end().canonical_key()? != target.canonical_key()? {
        return Err(Error::InvalidSequence {
            step: seq.len(),
            reason: format!("simulation ended at {} instead of {}", seq.end(), target),
        });
    }
    Ok(seq)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Point;

    fn pset(raw: &[(i32, i32)]) -> PointSet {
        PointSet::new(raw.iter().map(|&(x, y)| Point::new(x, y)).collect()).unwrap()
    }

    /// Square with an interior point near the bottom edge.
    fn w5() -> PointSet {
        pset(&[(0, 0), (4, 0), (4, 4), (0, 4), (2, 1)])
    }

    fn path(set: &PointSet, order: &[usize]) -> SpanningPath {
        SpanningPath::new(set, order.to_vec()).unwrap()
    }

    #[test]
    fn path_validation() {
        let s = w5();
        assert!(SpanningPath::new(&s, vec![0, 1, 2, 3, 4]).is_ok());
        assert!(matches!(
            SpanningPath::new(&s, vec![0, 1, 2, 3]),
            Err(Error::NotAPermutation(5))
        ));
        assert!(matches!(
            SpanningPath::new(&s, vec![0, 1, 2, 3, 3]),
            Err(Error::NotAPermutation(5))
        ));
        // 0-2 crosses 1-3 inside the square.
        assert!(matches!(
            SpanningPath::new(&s, vec![4, 0, 2, 1, 3]),
            Err(Error::NotPlane(..))
        ));
        assert!(is_plane_path(&s, &[0, 1, 2, 3, 4]));
        assert!(!is_plane_path(&s, &[4, 0, 2, 1, 3]));
        assert!(!is_plane_path(&s, &[0, 1, 2]));
    }

    #[test]
    fn canonical_key_ignores_orientation() {
        let s = w5();
        let p = path(&s, &[0, 1, 2, 3, 4]);
        let q = path(&s, &[4, 3, 2, 1, 0]);
        assert_eq!(p.canonical_key().unwrap(), q.canonical_key().unwrap());
        assert_ne!(
            p.canonical_key().unwrap(),
            path(&s, &[1, 0, 3, 2, 4]).canonical_key().unwrap()
        );
        let key = p.canonical_key().unwrap();
        assert_eq!(key.decode(5), vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn display_and_parse_round_trip() {
        let s = w5();
        let p = path(&s, &[2, 3, 0, 4, 1]);
        assert_eq!(p.to_string(), "2 3 0 4 1");
        assert_eq!(SpanningPath::parse(&s, "2 3 0 4 1").unwrap(), p);
        assert!(SpanningPath::parse(&s, "2 3 0 4").is_err());
        assert!(SpanningPath::parse(&s, "2 3 0 4 x").is_err());
    }

    /// Triangle: every spanning path flips to both others by the end join.
    #[test]
    fn triangle_flips_are_type2() {
        let s = pset(&[(0, 0), (4, 0), (1, 3)]);
        let p = path(&s, &[1, 0, 2]);
        let flips = enumerate_flips(&s, &p);
        // Two flips: remove either edge, add 1-2 both times.
        assert_eq!(flips.len(), 2);
        for f in &flips {
            assert_eq!(f.kind(), FlipKind::Type2);
            assert_eq!(f.added(), (1, 2));
            assert!(f.reverses_chunk());
        }
        assert_eq!(flips[0].removed(), (0, 1));
        assert_eq!(flips[1].removed(), (0, 2));
    }

    #[test]
    fn flip_equality_ignores_kind() {
        let a = Flip::new((0, 1), (1, 2), FlipKind::Type1);
        let b = Flip::new((1, 0), (2, 1), FlipKind::Type2);
        assert_eq!(a, b);
        assert_eq!(a.inverse().removed(), (1, 2));
        assert_eq!(a.inverse().added(), (0, 1));
    }

    /// Convex quadrilateral in ccw order 0,1,2,3.
    #[test]
    fn convex_quad_flip_census() {
        let s = pset(&[(0, 0), (4, 0), (4, 4), (0, 4)]);
        // Path around three sides; adding 0-3 closes the plane 4-cycle.
        let p = path(&s, &[0, 1, 2, 3]);
        let flips = enumerate_flips(&s, &p);
        // k=0: join only (type-1 range excludes k=0). k=1: both type 1
        // candidates plus the join. k=2: join only.
        let joins: Vec<&Flip> = flips.iter().filter(|f| f.added() == (0, 3)).collect();
        assert_eq!(joins.len(), 3, "plane cycle: any edge removal pairs with the joiner");
        assert!(joins.iter().all(|f| f.kind() == FlipKind::Type2));
        let type1: Vec<&Flip> = flips.iter().filter(|f| f.kind() == FlipKind::Type1).collect();
        // Removing 1-2: adding 0-2 crosses nothing; adding 1-3 crosses nothing.
        assert_eq!(type1.len(), 2);
        assert_eq!(flips.len(), 5);

        // The zigzag path 1,0,2,3: its end join 1-3 crosses edge 0-2.
        let zig = path(&s, &[1, 0, 2, 3]);
        let flips = enumerate_flips(&s, &zig);
        let t3: Vec<&Flip> = flips.iter().filter(|f| f.kind() == FlipKind::Type3).collect();
        assert_eq!(t3.len(), 1);
        assert_eq!(t3[0].removed(), (0, 2));
        assert_eq!(t3[0].added(), (1, 3));
        assert!(!t3[0].reverses_chunk());
        let r = apply_flip(&s, &zig, t3[0]).unwrap();
        assert!(is_plane_path(&s, r.order()));
        assert_eq!(r.canonical_key().unwrap(), path(&s, &[0, 1, 3, 2]).canonical_key().unwrap());
    }

    #[test]
    fn apply_rejects_foreign_flips() {
        let s = w5();
        let p = path(&s, &[0, 1, 2, 3, 4]);
        // Removing a non-edge.
        let bad = Flip::new((0, 2), (0, 4), FlipKind::Type1);
        assert!(matches!(apply_flip(&s, &p, &bad), Err(Error::InvalidFlip(_))));
        // Removing a real edge but adding one that is neither a reconnection
        // nor the end joiner.
        let bad = Flip::new((1, 2), (2, 4), FlipKind::Type1);
        assert!(matches!(apply_flip(&s, &p, &bad), Err(Error::InvalidFlip(_))));
        // Everything the enumerator lists must apply cleanly.
        for f in enumerate_flips(&s, &p) {
            assert!(apply_flip(&s, &p, &f).is_ok());
        }
    }

    #[test]
    fn every_flip_is_involutive() {
        let s = w5();
        let p = path(&s, &[1, 4, 0, 3, 2]);
        for (f, q) in enumerate_flips_with_results(&s, &p) {
            let back = apply_flip(&s, &q, &f.inverse()).unwrap();
            assert_eq!(back.canonical_key().unwrap(), p.canonical_key().unwrap());
            // The inverse carries the same label on the flipped path.
            let listed = enumerate_flips(&s, &q);
            let found = listed.iter().find(|c| **c == f.inverse()).unwrap();
            assert_eq!(found.kind(), f.kind());
        }
    }

    #[test]
    fn simulation_decomposes_type2_flips() {
        let s = w5();
        // Path 4,0,3,2,1 plus the joining edge 4-1 is a plane cycle.
        let p = path(&s, &[4, 0, 3, 2, 1]);
        let flips = enumerate_flips(&s, &p);
        for f in flips.iter().filter(|f| f.kind() == FlipKind::Type2) {
            let k = p.edge_position(f.removed().0, f.removed().1).unwrap();
            let seq = simulate_type2_by_type1(&s, &p, f).unwrap();
            assert_eq!(seq.len(), k + 1, "i-1 single-chunk flips for the edge at position i-1");
            for step in seq.flips() {
                assert!(step.reverses_chunk());
            }
            let direct = apply_flip(&s, &p, f).unwrap();
            assert_eq!(seq.end().canonical_key().unwrap(), direct.canonical_key().unwrap());
        }
        // Non-Type-2 flips are rejected.
        for f in flips.iter().filter(|f| f.kind() != FlipKind::Type2) {
            assert!(simulate_type2_by_type1(&s, &p, f).is_err());
        }
    }

    #[test]
    fn sequence_replay_and_reversal() {
        let s = w5();
        let p = path(&s, &[0, 1, 2, 3, 4]);
        let all = enumerate_flips_with_results(&s, &p);
        let (f1, q) = all[0].clone();
        let f2 = enumerate_flips(&s, &q)[0];
        let seq = FlipSequence::replay(&s, p.clone(), vec![f1, f2]).unwrap();
        assert_eq!(seq.len(), 2);
        assert_eq!(seq.paths().len(), 3);
        let back = seq.reversed(&s).unwrap();
        assert_eq!(back.start().canonical_key().unwrap(), seq.end().canonical_key().unwrap());
        assert_eq!(back.end().canonical_key().unwrap(), p.canonical_key().unwrap());
        // Replay rejects corrupted sequences.
        let bogus = Flip::new((0, 1), (0, 2), FlipKind::Type1);
        assert!(matches!(
            FlipSequence::replay(&s, p, vec![bogus, f1]),
            Err(Error::InvalidSequence { step: 0, .. })
        ));
    }
}
