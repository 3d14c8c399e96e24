//! Append-only JSON-lines corpus: a header line recording the format version
//! and caps, then one record per 321-avoiding element in (length, window)
//! order. A rerun validates the existing prefix and appends what is missing.

use std::fs::{File, OpenOptions};
use std::io::{Read, Write};
use std::path::Path;

use cylkit::enumerate::layers_with;
use cylkit::par::expand_batch;
use cylkit::stanley::{ExpansionTerm, DEFAULT_LENGTH_CAP};
use cylkit::{AffinePermutation, Error};
use serde::{Deserialize, Serialize};

use crate::Failure;

const FORMAT: &str = "cylkit-corpus";
const VERSION: u32 = 1;
const BATCH: usize = 64;

#[derive(Debug, PartialEq, Eq, Serialize, Deserialize)]
struct Header {
    format: String,
    version: u32,
    n: usize,
    maxlen: usize,
}

#[derive(Debug, Serialize, Deserialize)]
struct Record {
    window: Vec<i64>,
    word: String,
    length: usize,
    terms: Vec<ExpansionTerm>,
}

#[derive(Debug, Serialize)]
pub struct Summary {
    pub total: usize,
    pub cached: usize,
    pub written: usize,
}

fn io(path: &Path, e: std::io::Error) -> Failure {
    Failure::Io(format!("{}: {e}", path.display()))
}

fn corrupted(path: &Path, line: usize, why: impl std::fmt::Display) -> Failure {
    Failure::Io(format!("{}: corrupted line {line}: {why}", path.display()))
}

/// Number of records already present, after checking them against `expected`.
fn validate(path: &Path, header: &Header, expected: &[AffinePermutation]) -> Result<usize, Failure> {
    let mut raw = String::new();
    File::open(path)
        .and_then(|mut f| f.read_to_string(&mut raw))
        .map_err(|e| io(path, e))?;
    if raw.is_empty() {
        return Ok(0);
    }
    let lines: Vec<&str> = raw.split_inclusive('\n').collect();
    let mut count = 0;
    for (k, line) in lines.iter().enumerate() {
        let number = k + 1;
        let Some(body) = line.strip_suffix('\n') else {
            return Err(corrupted(path, number, "truncated line"));
        };
        if number == 1 {
            let found: Header = serde_json::from_str(body).map_err(|e| corrupted(path, number, e))?;
            if found != *header {
                return Err(Failure::Input(format!(
                    "{}: header {body} does not match n={} maxlen={}",
                    path.display(),
                    header.n,
                    header.maxlen
                )));
            }
            continue;
        }
        let record: Record = serde_json::from_str(body).map_err(|e| corrupted(path, number, e))?;
        let want = expected
            .get(count)
            .ok_or_else(|| corrupted(path, number, "more records than the caps allow"))?;
        if record.window != want.window() {
            return Err(corrupted(path, number, format!("expected window {want}")));
        }
        count += 1;
    }
    Ok(count)
}

fn record(w: &AffinePermutation, exp: Result<cylkit::stanley::AffineSchurExpansion, Error>) -> Result<Record, Failure> {
    let exp = exp?;
    Ok(Record {
        window: w.window().to_vec(),
        word: w.reduced_word().to_string(),
        length: w.length(),
        terms: exp.rendered(),
    })
}

/// Writes or resumes the corpus at `path`.
pub fn build(path: &Path, n: usize, maxlen: usize) -> Result<Summary, Failure> {
    if n < 2 {
        return Err(Error::InvalidPeriod(n).into());
    }
    if maxlen > DEFAULT_LENGTH_CAP {
        return Err(Error::CapExceeded {
            what: "length",
            value: maxlen,
            cap: DEFAULT_LENGTH_CAP,
        }
        .into());
    }
    let header = Header {
        format: FORMAT.into(),
        version: VERSION,
        n,
        maxlen,
    };
    let expected: Vec<AffinePermutation> = layers_with(n, maxlen, AffinePermutation::is_321_avoiding)
        .into_iter()
        .flatten()
        .collect();
    let fresh = std::fs::metadata(path).map(|m| m.len() == 0).unwrap_or(true);
    let cached = if fresh { 0 } else { validate(path, &header, &expected)? };
    let mut file = OpenOptions::new()
        .create(true)
        .append(true)
        .open(path)
        .map_err(|e| io(path, e))?;
    if fresh {
        let line = serde_json::to_string(&header).expect("serializable");
        writeln!(file, "{line}").map_err(|e| io(path, e))?;
    }
    let todo = &expected[cached..];
    for chunk in todo.chunks(BATCH) {
        let mut out = String::new();
        for (w, exp) in chunk.iter().zip(expand_batch(chunk)) {
            out.push_str(&serde_json::to_string(&record(w, exp)?).expect("serializable"));
            out.push('\n');
        }
        file.write_all(out.as_bytes()).map_err(|e| io(path, e))?;
        file.flush().map_err(|e| io(path, e))?;
    }
    Ok(Summary {
        total: expected.len(),
        cached,
        written: todo.len(),
    })
}
