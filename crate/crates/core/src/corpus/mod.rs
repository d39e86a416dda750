//! Corpus management: binary order-type files, text point lists, seeded
//! random instances, synthetic order-type enumeration, constructed
//! instance families, and the batch verification runner.
//!
//! The binary format is the classic fixed-width order-type layout: records
//! are concatenated without any header, each record holds `n` points as
//! `x` then `y`, both unsigned 8-bit for `n <= 8` and unsigned 16-bit
//! little-endian for `n` in 9..=10.

pub mod instances;
pub mod runner;
pub mod synth;

use std::fs;
use std::io::{BufReader, BufWriter, Read as _, Write as _};
use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::geometry::{Point, PointSet};

/// Lowest point count with a defined record layout.
pub const MIN_DB_POINTS: usize = 3;
/// Highest point count with a defined record layout.
pub const MAX_DB_POINTS: usize = 10;

/// One record of an order-type database file.
#[derive(Debug, Clone)]
pub struct OrderTypeRecord {
    /// Number of points per record in the source file.
    pub n: usize,
    /// 0-based position of this record in the file.
    pub index: usize,
    /// The decoded point set.
    pub points: PointSet,
}

/// Bytes per coordinate for an `n`-point record.
fn coord_width(n: usize) -> Result<usize> {
    if n < MIN_DB_POINTS {
        return Err(Error::TooFewPoints { need: MIN_DB_POINTS, got: n });
    }
    match n {
        3..=8 => Ok(1),
        9..=10 => Ok(2),
        _ => Err(Error::TooLarge { got: n, limit: MAX_DB_POINTS }),
    }
}

/// Bytes per record for an `n`-point order-type file.
pub fn record_size(n: usize) -> Result<usize> {
    Ok(n * 2 * coord_width(n)?)
}

/// Streaming reader over the records of an order-type database file.
pub struct OrderTypeFileReader {
    reader: BufReader<fs::File>,
    n: usize,
    width: usize,
    next_index: usize,
    remaining: usize,
}

impl OrderTypeFileReader {
    /// Opens `path` as an `n`-point order-type file.
    ///
    /// The file length must be an exact multiple of the record size.
    pub fn open(path: &Path, n: usize) -> Result<Self> {
        let width = coord_width(n)?;
        let record = n * 2 * width;
        let file = fs::File::open(path)?;
        let len = file.metadata()?.len() as usize;
        if len % record != 0 {
            return Err(Error::Parse(format!(
                "{}: length {} bytes is not a multiple of the {}-byte record size for n = {}",
                path.display(),
                len,
                record,
                n
            )));
        }
        Ok(OrderTypeFileReader {
            reader: BufReader::new(file),
            n,
            width,
            next_index: 0,
            remaining: len / record,
        })
    }

    /// Total number of records in the file.
    pub fn record_count(&self) -> usize {
        self.next_index + self.remaining
    }

    fn read_record(&mut self) -> Result<OrderTypeRecord> {
        // The record slot is consumed up front so that a bad record yields
        // exactly one error and iteration moves on.
        let index = self.next_index;
        self.next_index += 1;
        self.remaining -= 1;
        let mut buf = vec![0u8; self.n * 2 * self.width];
        self.reader.read_exact(&mut buf)?;
        let coord = |slot: usize| -> i32 {
            match self.width {
                1 => buf[slot] as i32,
                _ => u16::from_le_bytes([buf[2 * slot], buf[2 * slot + 1]]) as i32,
            }
        };
        let points: Vec<Point> = (0..self.n)
            .map(|i| Point::new(coord(2 * i), coord(2 * i + 1)))
            .collect();
        let points = PointSet::new(points)
            .map_err(|e| Error::Parse(format!("record {index}: {e}")))?;
        Ok(OrderTypeRecord { n: self.n, index, points })
    }
}

impl Iterator for OrderTypeFileReader {
    type Item = Result<OrderTypeRecord>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.remaining == 0 {
            return None;
        }
        Some(self.read_record())
    }
}

/// Reads every record of an order-type database file.
pub fn read_order_type_file(path: &Path, n: usize) -> Result<Vec<OrderTypeRecord>> {
    OrderTypeFileReader::open(path, n)?.collect()
}

/// Writes point sets as an order-type database file.
///
/// Every set must have exactly `n` points with coordinates representable
/// at the fixed width for `n` (8-bit for `n <= 8`, 16-bit otherwise).
pub fn write_order_type_file(path: &Path, n: usize, sets: &[PointSet]) -> Result<()> {
    let width = coord_width(n)?;
    let limit = if width == 1 { u8::MAX as i32 } else { u16::MAX as i32 };
    let mut out = BufWriter::new(fs::File::create(path)?);
    for (index, set) in sets.iter().enumerate() {
        if set.len() != n {
            return Err(Error::StructureMismatch(format!(
                "record {index} has {} points, expected {n}",
                set.len()
            )));
        }
        for p in set.points() {
            for c in [p.x, p.y] {
                if c < 0 || c > limit {
                    return Err(Error::CoordinateOutOfRange(c as i64));
                }
                if width == 1 {
                    out.write_all(&[c as u8])?;
                } else {
                    out.write_all(&(c as u16).to_le_bytes())?;
                }
            }
        }
    }
    out.flush()?;
    Ok(())
}

/// Parses a point set from text: one `x y` pair per line, `#` comments.
pub fn parse_points_text(text: &str) -> Result<PointSet> {
    let mut points = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.is_empty() {
            continue;
        }
        let lineno = lineno + 1;
        if tokens.len() != 2 {
            return Err(Error::Parse(format!(
                "line {lineno}: expected \"x y\", found {} tokens",
                tokens.len()
            )));
        }
        let parse = |t: &str| {
            t.parse::<i32>()
                .map_err(|_| Error::Parse(format!("line {lineno}: invalid integer {t:?}")))
        };
        points.push(Point::new(parse(tokens[0])?, parse(tokens[1])?));
    }
    PointSet::new(points)
}

/// Reads a point set from a text file of `x y` lines.
pub fn read_points_text(path: &Path) -> Result<PointSet> {
    parse_points_text(&fs::read_to_string(path)?)
}

/// Generates a uniform random point set in general position.
///
/// Points are drawn uniformly from `[0, coordinate_bound)^2` and redrawn
/// while they collide with or are collinear with earlier picks. The result
/// is a deterministic function of `(n, seed, coordinate_bound)`.
pub fn generate_random(n: usize, seed: u64, coordinate_bound: i32) -> Result<PointSet> {
    if n < 3 {
        return Err(Error::TooFewPoints { need: 3, got: n });
    }
    if coordinate_bound < 1 || coordinate_bound > crate::geometry::MAX_COORD {
        return Err(Error::CoordinateOutOfRange(coordinate_bound as i64));
    }
    // A b x b grid supports at most 2b points with no three collinear, and
    // random placement needs generous slack on top of that.
    if (coordinate_bound as u64).pow(2) < 16 * (n as u64).pow(2) {
        return Err(Error::StructureMismatch(format!(
            "coordinate bound {coordinate_bound} is too small for {n} random points in general position"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points: Vec<Point> = Vec::with_capacity(n);
    let mut attempts = 0usize;
    while points.len() < n {
        attempts += 1;
        if attempts > 100_000 {
            return Err(Error::StructureMismatch(format!(
                "could not place {n} points in general position within bound {coordinate_bound}"
            )));
        }
        let p = Point::new(rng.gen_range(0..coordinate_bound), rng.gen_range(0..coordinate_bound));
        let clashes = points.iter().any(|&q| q == p)
            || points.iter().enumerate().any(|(i, &a)| {
                points[i + 1..].iter().any(|&b| crate::geometry::orient(a, b, p) == 0)
            });
        if !clashes {
            points.push(p);
        }
    }
    PointSet::new(points)
}
