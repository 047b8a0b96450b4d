//! Text formats: the `sidonset v1` point-set file and coverage CSVs.
//!
//! ```text
//! # sidonset v1
//! n=6
//! 0x0
//! 0x1a
//! ```
//!
//! Points are lowercase hex with a `0x` prefix, strictly ascending, one per
//! line, every line newline-terminated.

use std::io::{self, BufRead, Write};

use crate::error::{Error, Result};
use crate::sidon::{CoverProfile, Point, SidonSet};

pub const SET_HEADER: &str = "# sidonset v1";

pub fn write_set<W: Write>(set: &SidonSet, mut out: W) -> io::Result<()> {
    writeln!(out, "{SET_HEADER}")?;
    writeln!(out, "n={}", set.n())?;
    for p in set.points() {
        writeln!(out, "{:#x}", p.0)?;
    }
    Ok(())
}

pub fn set_to_string(set: &SidonSet) -> String {
    let mut buf = Vec::new();
    write_set(set, &mut buf).expect("writing to a Vec cannot fail");
    String::from_utf8(buf).expect("ascii output")
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn parse_point(s: &str, line: usize) -> Result<u32> {
    let digits = s
        .strip_prefix("0x")
        .ok_or_else(|| parse_err(line, format!("expected 0x-prefixed hex, got {s:?}")))?;
    let canonical = !digits.is_empty()
        && digits
            .bytes()
            .all(|b| b.is_ascii_digit() || (b'a'..=b'f').contains(&b))
        && (digits == "0" || !digits.starts_with('0'));
    if !canonical {
        return Err(parse_err(
            line,
            format!("not canonical lowercase hex: {s:?}"),
        ));
    }
    u32::from_str_radix(digits, 16).map_err(|e| parse_err(line, format!("{s:?}: {e}")))
}

/// Parses a `sidonset v1` document. The returned set is not certified.
pub fn read_set<R: BufRead>(input: R) -> Result<SidonSet> {
    let mut lines = input.lines();

    match lines.next().transpose()? {
        Some(h) if h == SET_HEADER => {}
        Some(h) => return Err(parse_err(1, format!("expected {SET_HEADER:?}, got {h:?}"))),
        None => return Err(parse_err(1, "empty file")),
    }
    let n: u32 = match lines.next().transpose()? {
        Some(l) => l
            .strip_prefix("n=")
            .filter(|d| !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit()))
            .and_then(|d| d.parse().ok())
            .ok_or_else(|| parse_err(2, format!("expected n=<decimal>, got {l:?}")))?,
        None => return Err(parse_err(2, "missing dimension line")),
    };

    let mut points: Vec<u32> = Vec::new();
    for (idx, line) in lines.enumerate() {
        let line_no = idx + 3;
        let v = parse_point(&line?, line_no)?;
        if points.last().is_some_and(|&prev| v <= prev) {
            return Err(parse_err(line_no, "points must be strictly ascending"));
        }
        points.push(v);
    }
    SidonSet::from_points(n, points.into_iter().map(Point))
}

pub fn parse_set(text: &str) -> Result<SidonSet> {
    if !text.is_empty() && !text.ends_with('\n') {
        let line = text.lines().count();
        return Err(parse_err(line, "missing final newline"));
    }
    read_set(text.as_bytes())
}

/// `point_hex,count`, one row per point of Z₂ⁿ.
pub fn write_profile_csv<W: Write>(profile: &CoverProfile, mut out: W) -> io::Result<()> {
    writeln!(out, "point_hex,count")?;
    for (x, c) in profile.counts.iter().enumerate() {
        writeln!(out, "{x:#x},{c}")?;
    }
    Ok(())
}

/// `count,num_points`, ascending by count.
pub fn write_histogram_csv<W: Write>(profile: &CoverProfile, mut out: W) -> io::Result<()> {
    writeln!(out, "count,num_points")?;
    for (c, k) in &profile.histogram {
        writeln!(out, "{c},{k}")?;
    }
    Ok(())
}
