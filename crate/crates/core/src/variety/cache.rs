//! Append-only, human-readable count cache.
//!
//! One line per entry: `<spec_digest> <m> <N_m>`, space separated. Malformed
//! or foreign lines are skipped (a digest mismatch is a cache miss, never an
//! error). Writers append whole lines under an exclusive advisory file lock;
//! readers take a shared lock, so they see complete lines only.

use num_bigint::BigInt;
use num_traits::Signed;
use std::collections::BTreeMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Read, Seek, SeekFrom, Write};
use std::path::Path;

fn parse_line(line: &str, digest: &str) -> Option<(u32, BigInt)> {
    let mut parts = line.split_whitespace();
    let d = parts.next()?;
    if d != digest {
        return None;
    }
    let m: u32 = parts.next()?.parse().ok()?;
    let n: BigInt = parts.next()?.parse().ok()?;
    if parts.next().is_some() || m == 0 || n.is_negative() {
        return None;
    }
    Some((m, n))
}

/// All cached counts for a digest; first occurrence of an m wins.
pub fn read_cached_counts(path: &Path, digest: &str) -> std::io::Result<BTreeMap<u32, BigInt>> {
    let file = match File::open(path) {
        Ok(f) => f,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(BTreeMap::new()),
        Err(e) => return Err(e),
    };
    file.lock_shared()?;
    let mut out = BTreeMap::new();
    for line in BufReader::new(&file).lines() {
        let line = line?;
        if let Some((m, n)) = parse_line(&line, digest) {
            out.entry(m).or_insert(n);
        }
    }
    Ok(out)
}

/// Append entries not already present, under the exclusive lock. The
/// re-read inside the lock keeps concurrent writers from duplicating lines.
pub(crate) fn append_counts(
    path: &Path,
    digest: &str,
    entries: &[(u32, BigInt)],
) -> std::io::Result<()> {
    let mut file = OpenOptions::new()
        .create(true)
        .read(true)
        .append(true)
        .open(path)?;
    file.lock()?;
    let mut existing = String::new();
    file.seek(SeekFrom::Start(0))?;
    file.read_to_string(&mut existing)?;
    let present: std::collections::BTreeSet<u32> = existing
        .lines()
        .filter_map(|l| parse_line(l, digest).map(|(m, _)| m))
        .collect();
    let mut buf = String::new();
    for (m, n) in entries {
        if !present.contains(m) {
            buf.push_str(&format!("{} {} {}\n", digest, m, n));
        }
    }
    if !buf.is_empty() {
        file.write_all(buf.as_bytes())?;
    }
    Ok(())
}
