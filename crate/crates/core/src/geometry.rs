//! Exact primitives on integer point sets in general position.
//!
//! Coordinates are bounded so that every sign computation fits in `i64`
//! without overflow; no floating point is used anywhere.

use crate::{Error, Result};

/// Exclusive bound on coordinate magnitude. With |x|, |y| < 2^20 the cross
/// products in [`orient`] stay below 2^42, far inside `i64`.
pub const MAX_COORD: i32 = 1 << 20;

/// A point with integer coordinates.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Point {
    pub x: i32,
    pub y: i32,
}

impl Point {
    pub const fn new(x: i32, y: i32) -> Self {
        Point { x, y }
    }
}

impl std::fmt::Display for Point {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Sign of the signed area of the triangle `a`, `b`, `c`:
/// `+1` for a counterclockwise turn, `-1` for clockwise, `0` for collinear.
pub fn orient(a: Point, b: Point, c: Point) -> i32 {
    let det = (b.x as i64 - a.x as i64) * (c.y as i64 - a.y as i64)
        - (b.y as i64 - a.y as i64) * (c.x as i64 - a.x as i64);
    det.signum() as i32
}

/// Do the closed segments `ab` and `cd` cross in a single interior point?
///
/// Under general position two segments that do not share an endpoint either
/// miss each other or cross properly; segments sharing an endpoint never
/// count as crossing.
pub fn segments_cross(a: Point, b: Point, c: Point, d: Point) -> bool {
    if a == c || a == d || b == c || b == d {
        return false;
    }
    let o1 = orient(a, b, c);
    let o2 = orient(a, b, d);
    let o3 = orient(c, d, a);
    let o4 = orient(c, d, b);
    o1 * o2 < 0 && o3 * o4 < 0
}

/// Are the points pairwise distinct with no collinear triple?
pub fn is_general_position(points: &[Point]) -> bool {
    check_general_position(points).is_ok()
}

fn check_general_position(points: &[Point]) -> Result<()> {
    for (i, p) in points.iter().enumerate() {
        for (j, q) in points.iter().enumerate().skip(i + 1) {
            if p == q {
                return Err(Error::DuplicatePoint(i, j));
            }
        }
    }
    for (i, p) in points.iter().enumerate() {
        for (j, q) in points.iter().enumerate().skip(i + 1) {
            for (k, r) in points.iter().enumerate().skip(j + 1) {
                if orient(*p, *q, *r) == 0 {
                    return Err(Error::CollinearTriple(i, j, k));
                }
            }
        }
    }
    Ok(())
}

/// An immutable point set, validated on construction: bounded coordinates,
/// pairwise distinct, no three collinear. Points are referred to by index.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PointSet {
    points: Vec<Point>,
}

impl PointSet {
    /// Validates and wraps a list of points.
    pub fn new(points: Vec<Point>) -> Result<Self> {
        for p in &points {
            if p.x.unsigned_abs() >= MAX_COORD as u32 || p.y.unsigned_abs() >= MAX_COORD as u32 {
                let bad = if p.x.unsigned_abs() >= MAX_COORD as u32 { p.x } else { p.y };
                return Err(Error::CoordinateOutOfRange(bad as i64));
            }
        }
        check_general_position(&points)?;
        Ok(PointSet { points })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn point(&self, i: usize) -> Point {
        self.points[i]
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    /// Indices of the convex hull in counterclockwise order, starting at the
    /// hull vertex with the smallest index.
    pub fn convex_hull(&self) -> Vec<usize> {
        convex_hull_indices(&self.points)
    }

    /// Is point `i` a vertex of the convex hull?
    pub fn is_extreme(&self, i: usize) -> bool {
        self.convex_hull().contains(&i)
    }

    /// Does the open triangle spanned by points `a`, `b`, `c` contain no
    /// other point of the set?
    pub fn triangle_empty(&self, a: usize, b: usize, c: usize) -> bool {
        let (pa, pb, pc) = (self.points[a], self.points[b], self.points[c]);
        // Normalize to counterclockwise so "inside" is three left turns.
        let (pb, pc) = if orient(pa, pb, pc) > 0 { (pb, pc) } else { (pc, pb) };
        for (i, &p) in self.points.iter().enumerate() {
            if i == a || i == b || i == c {
                continue;
            }
            if orient(pa, pb, p) > 0 && orient(pb, pc, p) > 0 && orient(pc, pa, p) > 0 {
                return false;
            }
        }
        true
    }

    /// Sorts `others` (indices into this set) counterclockwise around the
    /// point `center`, starting at the ray from `center` through
    /// `start_dir` and sweeping counterclockwise.
    ///
    /// The center may be any point, in the set or not (constructions sort
    /// around auxiliary points). A point of `others` on the start ray comes
    /// first. Fails if two of the sorted points are collinear with the
    /// center — impossible for a center in the set, but a real concern for
    /// arbitrary centers.
    pub fn radial_order(&self, center: Point, others: &[usize], start_dir: Point) -> Result<Vec<usize>> {
        if start_dir == center {
            return Err(Error::StructureMismatch(
                "radial sort needs a start direction distinct from the center".into(),
            ));
        }
        for (a, &i) in others.iter().enumerate() {
            if self.points[i] == center {
                return Err(Error::StructureMismatch(format!(
                    "radial sort center coincides with point {i}"
                )));
            }
            for &j in &others[a + 1..] {
                if orient(center, self.points[i], self.points[j]) == 0 {
                    return Err(Error::CollinearWithCenter(i, j));
                }
            }
        }
        let dir = vec_from(center, start_dir);
        let mut order: Vec<usize> = others.to_vec();
        order.sort_by(|&i, &j| {
            compare_around(dir, vec_from(center, self.points[i]), vec_from(center, self.points[j]))
        });
        Ok(order)
    }
}

fn vec_from(c: Point, p: Point) -> Point {
    Point::new(p.x - c.x, p.y - c.y)
}

fn cross(u: Point, v: Point) -> i64 {
    u.x as i64 * v.y as i64 - u.y as i64 * v.x as i64
}

fn dot(u: Point, v: Point) -> i64 {
    u.x as i64 * v.x as i64 + u.y as i64 * v.y as i64
}

/// Angular class of `v` relative to the reference direction `d`:
/// 0 on the ray `d`, then counterclockwise classes 1 (0, pi), 2 (exactly
/// opposite), 3 (pi, 2 pi).
fn angular_class(d: Point, v: Point) -> u8 {
    let cr = cross(d, v);
    if cr == 0 {
        if dot(d, v) > 0 {
            0
        } else {
            2
        }
    } else if cr > 0 {
        1
    } else {
        3
    }
}

fn compare_around(d: Point, u: Point, v: Point) -> std::cmp::Ordering {
    let (cu, cv) = (angular_class(d, u), angular_class(d, v));
    if cu != cv {
        return cu.cmp(&cv);
    }
    // Same open half-plane: counterclockwise order is a strict total order.
    cross(v, u).cmp(&0)
}

/// Convex hull of `points` (counterclockwise, starting at the smallest
/// participating index). Assumes general position; collinear inputs would
/// have been rejected at `PointSet` construction.
pub fn convex_hull_indices(points: &[Point]) -> Vec<usize> {
    let n = points.len();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by_key(|&i| (points[i].x, points[i].y));
    let mut lower: Vec<usize> = Vec::new();
    for &i in &idx {
        while lower.len() >= 2
            && orient(points[lower[lower.len() - 2]], points[lower[lower.len() - 1]], points[i]) <= 0
        {
            lower.pop();
        }
        lower.push(i);
    }
    let mut upper: Vec<usize> = Vec::new();
    for &i in idx.iter().rev() {
        while upper.len() >= 2
            && orient(points[upper[upper.len() - 2]], points[upper[upper.len() - 1]], points[i]) <= 0
        {
            upper.pop();
        }
        upper.push(i);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    // Rotate so the smallest index leads; the cycle itself is already ccw.
    let min_pos = lower
        .iter()
        .enumerate()
        .min_by_key(|(_, &v)| v)
        .map(|(p, _)| p)
        .unwrap();
    lower.rotate_left(min_pos);
    lower
}

/// Is `p` strictly inside the simple polygon with the given vertices?
/// Exact crossing-number test; `p` must not lie on the boundary, which is
/// guaranteed when `p` is a point of a general-position set and the polygon
/// vertices are other points of that set.
pub fn point_in_polygon(p: Point, polygon: &[Point]) -> bool {
    let n = polygon.len();
    let mut inside = false;
    for i in 0..n {
        let a = polygon[i];
        let b = polygon[(i + 1) % n];
        // Does the horizontal ray from p to +infinity cross edge ab?
        if (a.y > p.y) != (b.y > p.y) {
            // Crossing iff p is strictly on the inner side; exact via orient.
            let side = orient(a, b, p);
            if (b.y > a.y && side > 0) || (b.y < a.y && side < 0) {
                inside = !inside;
            }
        }
    }
    inside
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(raw: &[(i32, i32)]) -> Vec<Point> {
        raw.iter().map(|&(x, y)| Point::new(x, y)).collect()
    }

    /// Square with one interior point near the bottom edge.
    fn w5() -> PointSet {
        PointSet::new(pts(&[(0, 0), (4, 0), (4, 4), (0, 4), (2, 1)])).unwrap()
    }

    #[test]
    fn orient_signs() {
        let (a, b) = (Point::new(0, 0), Point::new(2, 0));
        assert_eq!(orient(a, b, Point::new(1, 1)), 1);
        assert_eq!(orient(a, b, Point::new(1, -1)), -1);
        assert_eq!(orient(a, b, Point::new(5, 0)), 0);
    }

    #[test]
    fn crossing_is_strict() {
        let (a, b) = (Point::new(0, 0), Point::new(4, 4));
        let (c, d) = (Point::new(0, 4), Point::new(4, 0));
        assert!(segments_cross(a, b, c, d));
        // Shared endpoint never counts.
        assert!(!segments_cross(a, b, b, c));
        // Disjoint segments.
        assert!(!segments_cross(a, b, Point::new(5, 0), Point::new(9, 1)));
        // Touching at an interior point of one segment only happens for
        // collinear-ish configs; a T-shape with the meeting point being an
        // endpoint of one segment does not cross.
        assert!(!segments_cross(Point::new(0, 0), Point::new(4, 0), Point::new(2, 0), Point::new(2, 3)));
    }

    #[test]
    fn construction_rejects_degenerate_inputs() {
        assert!(matches!(
            PointSet::new(pts(&[(0, 0), (1, 1), (0, 0)])),
            Err(Error::DuplicatePoint(0, 2))
        ));
        assert!(matches!(
            PointSet::new(pts(&[(0, 0), (1, 1), (2, 2), (5, 0)])),
            Err(Error::CollinearTriple(0, 1, 2))
        ));
        assert!(matches!(
            PointSet::new(pts(&[(1 << 20, 0), (0, 1), (5, 0)])),
            Err(Error::CoordinateOutOfRange(_))
        ));
        assert!(is_general_position(&pts(&[(0, 0), (4, 0), (2, 3)])));
        assert!(!is_general_position(&pts(&[(0, 0), (2, 0), (4, 0)])));
    }

    #[test]
    fn hull_of_square_with_interior_point() {
        let s = w5();
        assert_eq!(s.convex_hull(), vec![0, 1, 2, 3]);
        assert!(s.is_extreme(0));
        assert!(!s.is_extreme(4));
    }

    #[test]
    fn hull_is_counterclockwise() {
        let s = PointSet::new(pts(&[(0, 0), (10, 1), (9, 8), (2, 9), (5, 4)])).unwrap();
        let h = s.convex_hull();
        assert_eq!(h, vec![0, 1, 2, 3]);
        for w in 0..h.len() {
            let a = s.point(h[w]);
            let b = s.point(h[(w + 1) % h.len()]);
            let c = s.point(h[(w + 2) % h.len()]);
            assert_eq!(orient(a, b, c), 1);
        }
    }

    #[test]
    fn triangle_emptiness() {
        let s = w5();
        // Triangle 0-1-2 contains the interior point 4.
        assert!(!s.triangle_empty(0, 1, 2));
        // Triangle 0-1-4 is empty.
        assert!(s.triangle_empty(0, 1, 4));
        // Orientation of the argument list must not matter.
        assert!(s.triangle_empty(4, 1, 0));
        assert!(!s.triangle_empty(2, 1, 0));
    }

    #[test]
    fn radial_order_around_interior_point() {
        let s = w5();
        // Around the interior point, starting at vertex 0, ccw.
        let order = s.radial_order(s.point(4), &[0, 1, 2, 3], s.point(0)).unwrap();
        assert_eq!(order, vec![0, 1, 2, 3]);
        // Starting at vertex 2 instead rotates the cycle.
        let order = s.radial_order(s.point(4), &[0, 1, 2, 3], s.point(2)).unwrap();
        assert_eq!(order, vec![2, 3, 0, 1]);
    }

    #[test]
    fn radial_order_rejects_collinear_pairs() {
        let origin = Point::new(0, 0);
        // Points 0 and 1 on one ray from the auxiliary center.
        let s = PointSet::new(pts(&[(2, 1), (4, 2), (1, 5)])).unwrap();
        assert!(matches!(
            s.radial_order(origin, &[0, 1, 2], Point::new(1, 0)),
            Err(Error::CollinearWithCenter(0, 1))
        ));
        // Points 0 and 1 on opposite rays through the center.
        let t = PointSet::new(pts(&[(2, 1), (-2, -1), (1, 5)])).unwrap();
        assert!(matches!(
            t.radial_order(origin, &[0, 1, 2], Point::new(1, 0)),
            Err(Error::CollinearWithCenter(0, 1))
        ));
        // A center coinciding with a sorted point is rejected.
        assert!(s.radial_order(s.point(0), &[0, 2], Point::new(1, 0)).is_err());
        // Leaving out the offending point makes the sort succeed.
        assert!(s.radial_order(origin, &[1, 2], Point::new(1, 0)).is_ok());
    }

    #[test]
    fn radial_order_full_turn_wraps() {
        // Points on all four sides of the center; start direction between them.
        let s =
            PointSet::new(pts(&[(0, 0), (5, 1), (1, 5), (-5, 2), (-2, -5), (6, -2)])).unwrap();
        let c = s.point(0);
        let order = s.radial_order(c, &[1, 2, 3, 4, 5], s.point(1)).unwrap();
        assert_eq!(order, vec![1, 2, 3, 4, 5]);
        let order = s.radial_order(c, &[1, 2, 3, 4, 5], s.point(4)).unwrap();
        assert_eq!(order, vec![4, 5, 1, 2, 3]);
    }

    #[test]
    fn polygon_membership() {
        let square = pts(&[(0, 0), (4, 0), (4, 4), (0, 4)]);
        assert!(point_in_polygon(Point::new(2, 1), &square));
        assert!(point_in_polygon(Point::new(1, 3), &square));
        assert!(!point_in_polygon(Point::new(5, 2), &square));
        assert!(!point_in_polygon(Point::new(-1, -1), &square));
        // Non-convex check: C-shaped polygon.
        let cshape = pts(&[(0, 0), (6, 0), (6, 2), (2, 2), (2, 4), (6, 4), (6, 6), (0, 6)]);
        assert!(point_in_polygon(Point::new(1, 3), &cshape));
        assert!(!point_in_polygon(Point::new(4, 3), &cshape));
    }
}
