//! The `HBF v1` truth-table file.
//!
//! ```text
//! HBF v1 n=4 k=2 modulus=0x13
//! 0312...
//! ```
//!
//! Word `i` is `F(element i)` as a big-endian hex number of `ceil(k/4)`
//! digits. Words are concatenated in index order and the payload is wrapped
//! at 64 hex characters per line.

use std::fmt::Write as _;
use std::path::Path;

use hyperbent::gf2n::shipped_modulus;
use hyperbent::{make_field, VectorialFunction};

use crate::error::{CliError, CliResult};

pub const MAGIC: &str = "HBF v1";
pub const LINE_WIDTH: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruthTableFile {
    pub n: u32,
    pub k: u32,
    pub modulus: u32,
    pub words: Vec<u32>,
}

fn digits(k: u32) -> usize {
    k.div_ceil(4) as usize
}

impl TruthTableFile {
    pub fn from_function(f: &VectorialFunction) -> Self {
        TruthTableFile { n: f.ctx().degree(), k: f.k(), modulus: f.ctx().modulus(), words: f.table().to_vec() }
    }

    pub fn to_function(&self) -> CliResult<VectorialFunction> {
        Ok(VectorialFunction::new(make_field(self.n)?, self.k, self.words.clone())?)
    }

    pub fn render(&self) -> String {
        let width = digits(self.k);
        let mut payload = String::with_capacity(self.words.len() * width);
        for &w in &self.words {
            write!(payload, "{w:0width$x}").expect("writing to a String");
        }
        let mut out = format!("{MAGIC} n={} k={} modulus={:#x}\n", self.n, self.k, self.modulus);
        for line in payload.as_bytes().chunks(LINE_WIDTH) {
            out.push_str(std::str::from_utf8(line).expect("hex is ascii"));
            out.push('\n');
        }
        out
    }

    pub fn parse(text: &str) -> CliResult<Self> {
        let mut lines = text.lines();
        let header = lines.next().ok_or_else(|| CliError::Parse("empty file".into()))?;
        let (n, k, modulus) = parse_header(header)?;
        let expected = shipped_modulus(n).ok_or_else(|| CliError::Parse(format!("unsupported degree n={n}")))?;
        if modulus != expected {
            return Err(CliError::Parse(format!(
                "modulus {modulus:#x} does not match the shipped modulus {expected:#x} for n={n}"
            )));
        }
        if k == 0 || k > 32 {
            return Err(CliError::Parse(format!("k={k} outside 1..=32")));
        }
        let payload: String = lines.flat_map(|l| l.chars()).filter(|c| !c.is_whitespace()).collect();
        let width = digits(k);
        let count = 1usize << n;
        if payload.len() != count * width {
            return Err(CliError::Parse(format!(
                "payload has {} hex digits, expected {} ({count} words of {width})",
                payload.len(),
                count * width
            )));
        }
        let words = (0..count)
            .map(|i| {
                let chunk = &payload[i * width..(i + 1) * width];
                let w = u32::from_str_radix(chunk, 16)
                    .map_err(|_| CliError::Parse(format!("word {i} is not hex: {chunk:?}")))?;
                if k < 32 && w >> k != 0 {
                    return Err(CliError::Parse(format!("word {i} = {w:#x} does not fit in k={k} bits")));
                }
                Ok(w)
            })
            .collect::<CliResult<Vec<u32>>>()?;
        Ok(TruthTableFile { n, k, modulus, words })
    }

    pub fn read(path: &Path) -> CliResult<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        Self::parse(&text)
    }

    pub fn write(&self, path: &Path) -> CliResult<()> {
        std::fs::write(path, self.render()).map_err(|e| CliError::io(path, e))
    }
}

fn parse_header(header: &str) -> CliResult<(u32, u32, u32)> {
    let rest =
        header.strip_prefix(MAGIC).ok_or_else(|| CliError::Parse(format!("header must start with {MAGIC:?}")))?;
    let mut n = None;
    let mut k = None;
    let mut modulus = None;
    for field in rest.split_whitespace() {
        let (key, value) =
            field.split_once('=').ok_or_else(|| CliError::Parse(format!("malformed header field {field:?}")))?;
        let bad = || CliError::Parse(format!("malformed header value {field:?}"));
        match key {
            "n" => n = Some(value.parse().map_err(|_| bad())?),
            "k" => k = Some(value.parse().map_err(|_| bad())?),
            "modulus" => {
                let hex = value.strip_prefix("0x").ok_or_else(bad)?;
                modulus = Some(u32::from_str_radix(hex, 16).map_err(|_| bad())?);
            }
            _ => return Err(CliError::Parse(format!("unknown header field {key:?}"))),
        }
    }
    match (n, k, modulus) {
        (Some(n), Some(k), Some(m)) => Ok((n, k, m)),
        _ => Err(CliError::Parse("header needs n, k and modulus".into())),
    }
}
