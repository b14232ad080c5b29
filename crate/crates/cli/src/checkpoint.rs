//! On-disk checkpoint format for resumable 3×3 searches.
//!
//! A checkpoint is a small self-describing text document (versioned header,
//! `key: value` lines, one `record:` line per accumulated find, and a
//! trailing FNV-1a content digest). Writes go to a sibling temp file first
//! and are renamed into place, so a crash never leaves a torn checkpoint.

use std::fs;
use std::path::Path;

use eigenperm_core::search::{Checkpoint, Record3, SearchRange};

use crate::CodecError;

const HEADER: &str = "eigenperm checkpoint v1";

pub fn render(checkpoint: &Checkpoint) -> String {
    let mut out = String::new();
    out.push_str(HEADER);
    out.push('\n');
    out.push_str(&format!("id: {}\n", checkpoint.search_id()));
    out.push_str(&format!("lo: {}\n", checkpoint.range.lo()));
    out.push_str(&format!("hi: {}\n", checkpoint.range.hi()));
    out.push_str(&format!("shards: {}\n", checkpoint.shards));
    out.push_str(&format!("block_size: {}\n", checkpoint.block_size));
    out.push_str(&format!("total_units: {}\n", checkpoint.total_units));
    out.push_str(&format!(
        "shard_next: {}\n",
        checkpoint
            .shard_next
            .iter()
            .map(|u| u.to_string())
            .collect::<Vec<_>>()
            .join(",")
    ));
    out.push_str(&format!("records: {}\n", checkpoint.records.len()));
    for record in &checkpoint.records {
        out.push_str(&format!(
            "record: {} trivial={} spectrum={},{},{}\n",
            record
                .coefficients
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(","),
            record.trivial,
            record.spectrum.0,
            record.spectrum.1,
            record.spectrum.2
        ));
    }
    out.push_str(&format!("digest: {:016x}\n", checkpoint.digest()));
    out
}

pub fn parse(text: &str) -> Result<Checkpoint, CodecError> {
    let corrupt = |reason: &str| CodecError::CorruptCheckpoint {
        reason: reason.to_string(),
    };
    let mut lines = text.lines();
    if lines.next() != Some(HEADER) {
        return Err(corrupt("missing or unsupported header"));
    }

    let mut id = None;
    let mut lo = None;
    let mut hi = None;
    let mut shards = None;
    let mut block_size = None;
    let mut total_units = None;
    let mut shard_next: Option<Vec<u64>> = None;
    let mut expected_records = None;
    let mut records: Vec<Record3> = Vec::new();
    let mut digest: Option<u64> = None;

    for line in lines {
        let Some((key, value)) = line.split_once(": ") else {
            return Err(corrupt("malformed line"));
        };
        match key {
            "id" => id = Some(value.to_string()),
            "lo" => lo = Some(value.parse::<i64>().map_err(|_| corrupt("bad lo"))?),
            "hi" => hi = Some(value.parse::<i64>().map_err(|_| corrupt("bad hi"))?),
            "shards" => shards = Some(value.parse::<u32>().map_err(|_| corrupt("bad shards"))?),
            "block_size" => {
                block_size = Some(
                    value
                        .parse::<u64>()
                        .map_err(|_| corrupt("bad block_size"))?,
                )
            }
            "total_units" => {
                total_units = Some(
                    value
                        .parse::<u64>()
                        .map_err(|_| corrupt("bad total_units"))?,
                )
            }
            "shard_next" => {
                shard_next = Some(
                    value
                        .split(',')
                        .map(|tok| tok.parse::<u64>())
                        .collect::<Result<_, _>>()
                        .map_err(|_| corrupt("bad shard_next"))?,
                )
            }
            "records" => {
                expected_records = Some(
                    value
                        .parse::<usize>()
                        .map_err(|_| corrupt("bad record count"))?,
                )
            }
            "record" => records.push(parse_record(value).ok_or_else(|| corrupt("bad record"))?),
            "digest" => {
                digest = Some(u64::from_str_radix(value, 16).map_err(|_| corrupt("bad digest"))?)
            }
            _ => return Err(corrupt("unknown key")),
        }
    }

    let range = SearchRange::new(
        lo.ok_or_else(|| corrupt("missing lo"))?,
        hi.ok_or_else(|| corrupt("missing hi"))?,
    )
    .map_err(|_| corrupt("invalid range"))?;
    let checkpoint = Checkpoint {
        range,
        shards: shards.ok_or_else(|| corrupt("missing shards"))?,
        block_size: block_size.ok_or_else(|| corrupt("missing block_size"))?,
        total_units: total_units.ok_or_else(|| corrupt("missing total_units"))?,
        shard_next: shard_next.ok_or_else(|| corrupt("missing shard_next"))?,
        records,
    };
    if checkpoint.records.len()
        != expected_records.ok_or_else(|| corrupt("missing record count"))?
    {
        return Err(corrupt("record count mismatch"));
    }
    if id.as_deref() != Some(checkpoint.search_id().as_str()) {
        return Err(corrupt("id does not match parameters"));
    }
    let expected_digest = digest.ok_or_else(|| corrupt("missing digest"))?;
    if checkpoint.digest() != expected_digest {
        return Err(corrupt("content digest mismatch"));
    }
    Ok(checkpoint)
}

fn parse_record(value: &str) -> Option<Record3> {
    let mut parts = value.split_whitespace();
    let coefficients: Vec<i64> = parts
        .next()?
        .split(',')
        .map(|tok| tok.parse::<i64>().ok())
        .collect::<Option<_>>()?;
    let coefficients: [i64; 9] = coefficients.try_into().ok()?;
    let trivial = match parts.next()?.strip_prefix("trivial=")? {
        "true" => true,
        "false" => false,
        _ => return None,
    };
    let spectrum: Vec<i64> = parts
        .next()?
        .strip_prefix("spectrum=")?
        .split(',')
        .map(|tok| tok.parse::<i64>().ok())
        .collect::<Option<_>>()?;
    let [s0, s1, s2]: [i64; 3] = spectrum.try_into().ok()?;
    Some(Record3 {
        coefficients,
        trivial,
        spectrum: (s0, s1, s2),
    })
}

/// Write atomically: temp file in the same directory, then rename.
pub fn save(checkpoint: &Checkpoint, path: &Path) -> Result<(), CodecError> {
    let tmp = path.with_extension("tmp");
    fs::write(&tmp, render(checkpoint))?;
    fs::rename(&tmp, path)?;
    Ok(())
}

pub fn load(path: &Path) -> Result<Checkpoint, CodecError> {
    parse(&fs::read_to_string(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use eigenperm_core::search::search_3x3;

    fn sample() -> Checkpoint {
        search_3x3(SearchRange::new(0, 1).unwrap(), 3, 2, Some(2), None)
            .unwrap()
            .checkpoint
    }

    #[test]
    fn render_parse_round_trip() {
        let checkpoint = sample();
        let parsed = parse(&render(&checkpoint)).unwrap();
        assert_eq!(parsed, checkpoint);
    }

    #[test]
    fn digest_tamper_detected() {
        let checkpoint = sample();
        let text = render(&checkpoint);
        // Flip a coefficient inside a record line.
        let tampered = text.replace("record: 0,0,0,0,0,0,0,0,0", "record: 0,0,0,0,0,0,0,0,1");
        if tampered != text {
            assert!(parse(&tampered).is_err());
        }
        let truncated = text
            .lines()
            .take_while(|l| !l.starts_with("digest"))
            .collect::<Vec<_>>()
            .join("\n");
        assert!(parse(&truncated).is_err());
    }

    #[test]
    fn save_load_via_file() {
        let checkpoint = sample();
        let dir = std::env::temp_dir().join("eigenperm-checkpoint-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("cp.txt");
        save(&checkpoint, &path).unwrap();
        assert_eq!(load(&path).unwrap(), checkpoint);
        std::fs::remove_dir_all(&dir).ok();
    }
}
