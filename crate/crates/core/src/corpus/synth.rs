//! Exhaustive synthesis of the order types of small planar point sets.
//!
//! Two point sets in general position have the same order type when some
//! relabeling matches them triple for triple with equal orientations; here,
//! as in the standard small-set databases, a set and its mirror image are
//! also identified. Each order type is reduced to an exact 64-bit signature
//! (the lexicographic minimum, over all radially induced labelings and both
//! orientations, of the packed chirotope bits), so equality of signatures
//! is equality of order types.
//!
//! The synthesizer starts from a triangle and repeatedly extends known
//! realizations by one point drawn from a coarse lattice, from rings around
//! pairwise line intersections, and from seeded random samples. Discovery
//! at each level must reach the published census of planar order types —
//! 1, 2, 3, 16, 135, 3315 for n = 3..=8 — before the next level starts; a
//! deficit triggers deterministic mutation rounds, then exhaustive sweeps
//! of the whole coordinate grid over every stored parent realization (and
//! perturbed variants of each, since which extensions a parent admits
//! depends on the realization, not just its order type), and a final
//! mismatch is a hard error, never a truncated corpus.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::geometry::{orient, Point, PointSet};

/// Published numbers of planar order types for n = 3..=8.
pub const KNOWN_ORDER_TYPE_COUNTS: [usize; 6] = [1, 2, 3, 16, 135, 3315];

/// Largest point count the synthesizer (and the 64-bit signature) supports.
pub const MAX_SYNTH_POINTS: usize = 8;

/// Coordinate ceiling for synthesized realizations (8-bit file format).
pub const SYNTH_COORD_MAX: i32 = 255;

/// The published order-type census for `n` points, when known.
pub fn expected_order_type_count(n: usize) -> Option<usize> {
    n.checked_sub(3).and_then(|i| KNOWN_ORDER_TYPE_COUNTS.get(i).copied())
}

/// Exact 64-bit order-type signature of a point set.
///
/// `raw` distinguishes mirror images; `canonical` identifies them.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrderTypeSignature {
    /// Minimum packed chirotope over all labelings of the set itself.
    pub raw: u64,
    /// Minimum packed chirotope over all labelings of the mirror image.
    pub mirror_raw: u64,
    /// Mirror-invariant signature: `min(raw, mirror_raw)`.
    pub canonical: u64,
}

/// All pairwise orientation signs of a set, indexed by ordered triple.
struct OrientCube {
    n: usize,
    signs: Vec<i8>,
}

impl OrientCube {
    fn new(set: &PointSet) -> Self {
        let n = set.len();
        let mut signs = vec![0i8; n * n * n];
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                for k in 0..n {
                    if k == i || k == j {
                        continue;
                    }
                    signs[(i * n + j) * n + k] =
                        orient(set.point(i), set.point(j), set.point(k)) as i8;
                }
            }
        }
        OrientCube { n, signs }
    }

    #[inline]
    fn sign(&self, i: usize, j: usize, k: usize) -> i8 {
        self.signs[(i * self.n + j) * self.n + k]
    }
}

/// Packs the chirotope bits of `order`-relabeled triples, most significant
/// bit first; `negate` reads the mirror image's orientations.
fn labeling_bits(cube: &OrientCube, order: &[usize], negate: bool) -> u64 {
    let n = order.len();
    let mut bits = 0u64;
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let s = cube.sign(order[a], order[b], order[c]);
                let positive = if negate { s < 0 } else { s > 0 };
                bits = (bits << 1) | positive as u64;
            }
        }
    }
    bits
}

/// Computes the exact order-type signature of `set`.
///
/// The labeling family is radial: for every ordered pair `(i, j)`, label
/// `i` first, then the remaining points in counterclockwise order around
/// `i` starting at the ray towards `j`. The cyclic order around a point is
/// an order-type invariant, so the minimum over this family (and, for the
/// mirror term, the family read clockwise with negated signs) is a complete
/// invariant: two sets share a signature exactly when they share an order
/// type.
pub fn order_type_signature(set: &PointSet) -> Result<OrderTypeSignature> {
    let n = set.len();
    if n > MAX_SYNTH_POINTS {
        return Err(Error::TooLarge { got: n, limit: MAX_SYNTH_POINTS });
    }
    let cube = OrientCube::new(set);
    let mut raw = u64::MAX;
    let mut mirror_raw = u64::MAX;
    let mut order: Vec<usize> = Vec::with_capacity(n);
    for i in 0..n {
        let others: Vec<usize> = (0..n).filter(|&k| k != i).collect();
        // One radial sort per center: the ring around i starting at j is
        // the same cyclic order for every j, cut at a different point.
        let ring = set.radial_order(set.point(i), &others, set.point(others[0]))?;
        let m = ring.len();
        for start in 0..m {
            order.clear();
            order.push(i);
            order.extend((0..m).map(|t| ring[(start + t) % m]));
            raw = raw.min(labeling_bits(&cube, &order, false));
            // The mirror image's counterclockwise order is the clockwise one.
            order.truncate(1);
            order.extend((0..m).map(|t| ring[(start + m - t) % m]));
            mirror_raw = mirror_raw.min(labeling_bits(&cube, &order, true));
        }
    }
    Ok(OrderTypeSignature { raw, mirror_raw, canonical: raw.min(mirror_raw) })
}

/// Number of distinct order types among `sets`.
pub fn order_type_census(sets: &[PointSet]) -> Result<usize> {
    let mut seen = BTreeSet::new();
    for set in sets {
        seen.insert(order_type_signature(set)?.canonical);
    }
    Ok(seen.len())
}

/// One fully enumerated level of the synthetic corpus.
pub struct CorpusLevel {
    /// Points per set at this level.
    pub n: usize,
    /// One realization per order type, ordered by canonical signature.
    pub sets: Vec<PointSet>,
    /// Canonical signatures, parallel to `sets`.
    pub signatures: Vec<u64>,
    /// Number of classes when mirror images are distinguished.
    pub raw_classes: usize,
}

/// A complete synthetic order-type corpus for 3..=max_n points.
pub struct SyntheticCorpus {
    /// Levels in increasing n.
    pub levels: Vec<CorpusLevel>,
}

struct TypeEntry {
    realizations: Vec<Vec<Point>>,
    raw_sigs: [u64; 2],
}

const MAX_REALIZATIONS: usize = 4;
/// Minimum pointwise Chebyshev distance before an alternative realization
/// of an already-known type is worth keeping for later extension.
const ALT_DISTANCE: i32 = 24;

type TypeMap = BTreeMap<u64, TypeEntry>;

fn insert_set(map: &mut TypeMap, points: Vec<Point>) -> Result<bool> {
    let set = PointSet::new(points)?;
    let sig = order_type_signature(&set)?;
    let points = set.points().to_vec();
    match map.entry(sig.canonical) {
        Entry::Vacant(v) => {
            v.insert(TypeEntry {
                realizations: vec![points],
                raw_sigs: [sig.raw, sig.mirror_raw],
            });
            Ok(true)
        }
        Entry::Occupied(mut o) => {
            let entry = o.get_mut();
            if entry.realizations.len() < MAX_REALIZATIONS {
                let far = |a: &[Point], b: &[Point]| {
                    a.iter()
                        .zip(b)
                        .map(|(p, q)| (p.x - q.x).abs().max((p.y - q.y).abs()))
                        .max()
                        .unwrap_or(0)
                        >= ALT_DISTANCE
                };
                if entry.realizations.iter().all(|r| far(r, &points)) {
                    entry.realizations.push(points);
                }
            }
            Ok(false)
        }
    }
}

fn raw_class_count(map: &TypeMap) -> usize {
    map.values().flat_map(|e| e.raw_sigs).collect::<BTreeSet<u64>>().len()
}

fn gate(n: usize, map: &TypeMap) -> Result<()> {
    let expected = expected_order_type_count(n)
        .ok_or(Error::TooLarge { got: n, limit: MAX_SYNTH_POINTS })?;
    if map.len() != expected {
        return Err(Error::StructureMismatch(format!(
            "order-type synthesis stalled at n = {n}: {} classes found, {expected} expected \
             ({} when mirror images are distinguished)",
            map.len(),
            raw_class_count(map)
        )));
    }
    Ok(())
}

fn level_from(n: usize, map: &TypeMap) -> CorpusLevel {
    CorpusLevel {
        n,
        sets: map
            .values()
            .map(|e| PointSet::new(e.realizations[0].clone()).expect("stored realization is valid"))
            .collect(),
        signatures: map.keys().copied().collect(),
        raw_classes: raw_class_count(map),
    }
}

fn seed_mix(parts: [u64; 4]) -> u64 {
    let mut h = 0x9E37_79B9_7F4A_7C15u64;
    for p in parts {
        h ^= p.wrapping_add(0x517C_C1B7_2722_0A95).rotate_left(23);
        h = h.wrapping_mul(0xBF58_476D_1CE4_E5B9);
        h ^= h >> 29;
    }
    h
}

/// Rounds `num / den` to the nearest integer (den != 0).
fn div_round(num: i64, den: i64) -> i64 {
    let (num, den) = if den < 0 { (-num, -den) } else { (num, den) };
    (2 * num + den).div_euclid(2 * den)
}

fn in_range(p: Point) -> bool {
    (0..=SYNTH_COORD_MAX).contains(&p.x) && (0..=SYNTH_COORD_MAX).contains(&p.y)
}

/// Candidate positions for one extra point over `set`.
///
/// The pool mixes a coarse lattice (large arrangement cells), small rings
/// around every set point and every intersection of two point-pair lines
/// (cells that hug arrangement vertices), and seeded random samples.
fn extension_candidates(set: &PointSet, seed: u64) -> Vec<Point> {
    let pts = set.points();
    let n = pts.len();
    let mut cand: Vec<Point> = Vec::new();

    for x in (0..=SYNTH_COORD_MAX).step_by(8) {
        for y in (0..=SYNTH_COORD_MAX).step_by(8) {
            cand.push(Point::new(x, y));
        }
    }

    let mut hubs: Vec<Point> = pts.to_vec();
    let mut lines: Vec<(Point, Point)> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            lines.push((pts[i], pts[j]));
        }
    }
    for (li, &(a, b)) in lines.iter().enumerate() {
        for &(c, d) in &lines[li + 1..] {
            let r = (b.x as i64 - a.x as i64, b.y as i64 - a.y as i64);
            let s = (d.x as i64 - c.x as i64, d.y as i64 - c.y as i64);
            let den = r.0 * s.1 - r.1 * s.0;
            if den == 0 {
                continue;
            }
            let ac = (c.x as i64 - a.x as i64, c.y as i64 - a.y as i64);
            let t_num = ac.0 * s.1 - ac.1 * s.0;
            let x = div_round(a.x as i64 * den + t_num * r.0, den);
            let y = div_round(a.y as i64 * den + t_num * r.1, den);
            if (-8..=SYNTH_COORD_MAX as i64 + 8).contains(&x)
                && (-8..=SYNTH_COORD_MAX as i64 + 8).contains(&y)
            {
                hubs.push(Point::new(x as i32, y as i32));
            }
        }
    }
    for hub in hubs {
        for dx in -2..=2 {
            for dy in -2..=2 {
                let p = Point::new(hub.x + dx, hub.y + dy);
                if in_range(p) {
                    cand.push(p);
                }
            }
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..256 {
        cand.push(Point::new(
            rng.gen_range(0..=SYNTH_COORD_MAX),
            rng.gen_range(0..=SYNTH_COORD_MAX),
        ));
    }

    cand.sort_unstable_by_key(|p| (p.x, p.y));
    cand.dedup();
    cand.retain(|p| !pts.contains(p));
    cand
}

fn jiggle(rng: &mut ChaCha8Rng, points: &[Point]) -> Vec<Point> {
    points
        .iter()
        .map(|p| {
            Point::new(
                (p.x + rng.gen_range(-3..=3)).clamp(0, SYNTH_COORD_MAX),
                (p.y + rng.gen_range(-3..=3)).clamp(0, SYNTH_COORD_MAX),
            )
        })
        .collect()
}

/// Mutation fallback for a level that is short of its census: perturb known
/// realizations at the level, re-extend perturbed parents, and mix in fresh
/// random sets. Deterministic per round.
fn mutation_round(
    parents: &TypeMap,
    map: &mut TypeMap,
    n: usize,
    round: u64,
) -> Result<()> {
    let snapshot: Vec<Vec<Point>> = map.values().map(|e| e.realizations[0].clone()).collect();
    for (idx, real) in snapshot.iter().enumerate() {
        let mut rng =
            ChaCha8Rng::seed_from_u64(seed_mix([n as u64, idx as u64, round, 1]));
        for _ in 0..2 {
            let _ = insert_set(map, jiggle(&mut rng, real));
        }
    }

    // Re-extend a deterministic rotating subset of perturbed parents: an
    // extension missed over one realization of a parent type is often
    // reachable over a nearby one.
    for (idx, entry) in parents.values().enumerate() {
        if idx as u64 % 5 != round % 5 {
            continue;
        }
        let mut rng =
            ChaCha8Rng::seed_from_u64(seed_mix([n as u64, idx as u64, round, 2]));
        let moved = jiggle(&mut rng, &entry.realizations[0]);
        if let Ok(base) = PointSet::new(moved.clone()) {
            for z in extension_candidates(&base, seed_mix([n as u64, idx as u64, round, 3])) {
                let mut pts = moved.clone();
                pts.push(z);
                let _ = insert_set(map, pts);
            }
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed_mix([n as u64, 0, round, 4]));
    for _ in 0..64 {
        let pts: Vec<Point> = (0..n)
            .map(|_| {
                Point::new(rng.gen_range(0..=SYNTH_COORD_MAX), rng.gen_range(0..=SYNTH_COORD_MAX))
            })
            .collect();
        let _ = insert_set(map, pts);
    }
    Ok(())
}

/// Exhaustive fallback for a level still short of its census after the
/// mutation rounds: sweep the whole coordinate grid (at the given stride)
/// as the extension point over every stored parent realization and two
/// perturbed variants of each.
///
/// The variants matter: which one-point extensions a parent admits is a
/// property of the realization — the cell structure of its line
/// arrangement — not of its order type alone, so a type missed over every
/// stored realization may appear over a nearby perturbation. Stops as soon
/// as the census is reached.
fn deep_sweep(
    parents: &TypeMap,
    map: &mut TypeMap,
    target_n: usize,
    expected: usize,
    stride: usize,
) -> Result<()> {
    let mut pool: Vec<Vec<Point>> = Vec::new();
    for slot in 0..MAX_REALIZATIONS {
        for (sig, entry) in parents.iter() {
            let Some(real) = entry.realizations.get(slot) else { continue };
            pool.push(real.clone());
            for v in 0..2u64 {
                let mut rng = ChaCha8Rng::seed_from_u64(seed_mix([
                    target_n as u64,
                    *sig,
                    stride as u64,
                    slot as u64 * 2 + v,
                ]));
                let moved = jiggle(&mut rng, real);
                if PointSet::new(moved.clone()).is_ok() {
                    pool.push(moved);
                }
            }
        }
    }

    for real in &pool {
        for x in (0..=SYNTH_COORD_MAX).step_by(stride) {
            for y in (0..=SYNTH_COORD_MAX).step_by(stride) {
                let z = Point::new(x, y);
                if real.contains(&z) {
                    continue;
                }
                let mut pts = real.clone();
                pts.push(z);
                let _ = insert_set(map, pts);
                if map.len() >= expected {
                    return Ok(());
                }
            }
        }
    }
    Ok(())
}

/// Enumerates one realization of every planar order type for 3..=max_n
/// points, gated level by level against the published census.
pub fn synthesize_order_types(max_n: usize) -> Result<SyntheticCorpus> {
    if max_n < 3 {
        return Err(Error::TooFewPoints { need: 3, got: max_n });
    }
    if max_n > MAX_SYNTH_POINTS {
        return Err(Error::TooLarge { got: max_n, limit: MAX_SYNTH_POINTS });
    }

    let mut current: TypeMap = BTreeMap::new();
    insert_set(
        &mut current,
        vec![Point::new(30, 40), Point::new(220, 30), Point::new(128, 230)],
    )?;
    gate(3, &current)?;
    let mut levels = vec![level_from(3, &current)];

    for n in 3..max_n {
        let target = n + 1;
        let expected = expected_order_type_count(target).expect("target <= MAX_SYNTH_POINTS");
        let mut next: TypeMap = BTreeMap::new();
        for (sig, entry) in &current {
            for (ridx, real) in entry.realizations.iter().enumerate() {
                let base = PointSet::new(real.clone()).expect("stored realization is valid");
                let seed = seed_mix([target as u64, *sig, ridx as u64, 0]);
                for z in extension_candidates(&base, seed) {
                    let mut pts = real.clone();
                    pts.push(z);
                    let _ = insert_set(&mut next, pts);
                }
            }
        }

        let mut round = 0u64;
        let mut stagnant = 0u32;
        while next.len() < expected && stagnant < 16 {
            round += 1;
            let before = next.len();
            mutation_round(&current, &mut next, target, round)?;
            stagnant = if next.len() == before { stagnant + 1 } else { 0 };
        }
        for stride in [2, 1] {
            if next.len() < expected {
                deep_sweep(&current, &mut next, target, expected, stride)?;
            }
        }

        gate(target, &next)?;
        levels.push(level_from(target, &next));
        current = next;
    }

    Ok(SyntheticCorpus { levels })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pset(coords: &[(i32, i32)]) -> PointSet {
        PointSet::new(coords.iter().map(|&(x, y)| Point::new(x, y)).collect()).unwrap()
    }

    #[test]
    fn signature_is_invariant_under_relabeling_and_similarity() {
        let base = pset(&[(0, 0), (9, 1), (7, 8), (1, 6), (4, 4)]);
        let sig = order_type_signature(&base).unwrap();

        let relabeled = pset(&[(7, 8), (0, 0), (4, 4), (9, 1), (1, 6)]);
        assert_eq!(order_type_signature(&relabeled).unwrap(), sig);

        let moved = pset(&[(30, 50), (57, 53), (51, 74), (33, 68), (42, 62)]);
        assert_eq!(order_type_signature(&moved).unwrap(), sig);

        // Clockwise quarter turn (x, y) -> (y, -x) is a rotation: raw class
        // is preserved.
        let turned = pset(&[(0, 0), (1, -9), (8, -7), (6, -1), (4, -4)]);
        assert_eq!(order_type_signature(&turned).unwrap(), sig);

        // Mirror image: canonical signature is preserved by construction.
        let mirrored = pset(&[(0, 0), (9, -1), (7, -8), (1, -6), (4, -4)]);
        let mir = order_type_signature(&mirrored).unwrap();
        assert_eq!(mir.canonical, sig.canonical);
        assert_eq!(mir.raw, sig.mirror_raw);
        assert_eq!(mir.mirror_raw, sig.raw);
    }

    #[test]
    fn signature_separates_distinct_types() {
        // The three order types of five points: convex, one interior point,
        // two interior points.
        let convex = pset(&[(2, 0), (5, 1), (6, 4), (2, 7), (0, 3)]);
        let one_in = pset(&[(0, 0), (4, 0), (4, 4), (0, 4), (2, 1)]);
        let two_in = pset(&[(0, 0), (12, 0), (6, 12), (5, 3), (7, 5)]);
        let sigs = [&convex, &one_in, &two_in]
            .iter()
            .map(|s| order_type_signature(s).unwrap().canonical)
            .collect::<BTreeSet<u64>>();
        assert_eq!(sigs.len(), 3);
        assert_eq!(
            order_type_census(&[convex, one_in, two_in]).unwrap(),
            3
        );
    }

    #[test]
    fn synthesis_reaches_the_census_through_n6() {
        let corpus = synthesize_order_types(6).unwrap();
        let counts: Vec<usize> = corpus.levels.iter().map(|l| l.sets.len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 16]);
        for level in &corpus.levels {
            assert_eq!(level.sets.len(), level.signatures.len());
            assert!(level.signatures.windows(2).all(|w| w[0] < w[1]));
            for set in &level.sets {
                assert_eq!(set.len(), level.n);
            }
            // Mirror-distinguishing classes can only exceed the census.
            assert!(level.raw_classes >= level.sets.len());
        }
    }
}
