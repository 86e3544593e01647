use std::fs;
use std::io::Write;
use std::path::Path;
use std::str::FromStr;

use num_complex::Complex64;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};
use msr_core::bargmann::DEFAULT_SEED;

pub fn read_text(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> CliResult<T> {
    let text = read_text(path)?;
    if text.trim().is_empty() {
        return Err(CliError::parse(path, "empty file"));
    }
    serde_json::from_str(&text).map_err(|e| CliError::parse(path, e))
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("output types serialize");
    s.push('\n');
    s
}

/// Writes to `path`, or to stdout when there is none.
pub fn emit(path: Option<&Path>, text: &str) -> CliResult<()> {
    match path {
        Some(p) => fs::write(p, text).map_err(|source| CliError::Io { path: p.to_path_buf(), source }),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|source| CliError::Io { path: "<stdout>".into(), source })
        }
    }
}

/// "1, 0.5-0.5i, 2i" -> amplitudes.
pub fn parse_coeffs(text: &str) -> CliResult<Vec<Complex64>> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    if parts.iter().any(|p| p.is_empty()) {
        return Err(CliError::Usage(format!("empty amplitude in \"{text}\"")));
    }
    parts
        .iter()
        .map(|p| {
            let z = Complex64::from_str(p).map_err(|_| CliError::Usage(format!("cannot parse amplitude \"{p}\"")))?;
            if z.is_finite() {
                Ok(z)
            } else {
                Err(CliError::Usage(format!("non-finite amplitude \"{p}\"")))
            }
        })
        .collect()
}

#[derive(Deserialize)]
struct GRow {
    s: f64,
    g: f64,
}

/// Reads `s,g` rows and checks that `s` is the uniform grid on `[0, θ]`.
pub fn read_g_csv(path: &Path, theta: f64) -> CliResult<Vec<f64>> {
    let text = read_text(path)?;
    let mut reader = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(text.as_bytes());
    let headers = reader.headers().map_err(|e| CliError::parse(path, e))?.clone();
    if headers.len() != 2 || &headers[0] != "s" || &headers[1] != "g" {
        return Err(CliError::parse(path, "header must be `s,g`"));
    }
    let rows: Vec<GRow> = reader.deserialize().collect::<Result<_, _>>().map_err(|e| CliError::parse(path, e))?;
    if rows.len() < 2 {
        return Err(CliError::parse(path, "need at least two rows"));
    }
    let h = theta / (rows.len() - 1) as f64;
    for (i, r) in rows.iter().enumerate() {
        if !r.s.is_finite() || (r.s - h * i as f64).abs() > 1e-9 {
            return Err(CliError::parse(
                path,
                format!("row {}: s = {} is off the uniform grid on [0, {theta}]", i + 1, r.s),
            ));
        }
    }
    Ok(rows.into_iter().map(|r| r.g).collect())
}

/// `--seed`, else `$MSR_SEED`, else the library default.
pub fn resolve_seed(flag: Option<u64>) -> CliResult<u64> {
    if let Some(s) = flag {
        return Ok(s);
    }
    match std::env::var("MSR_SEED") {
        Ok(v) => v.trim().parse().map_err(|_| CliError::Usage(format!("MSR_SEED=\"{v}\" is not an unsigned integer"))),
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_SEED),
        Err(e) => Err(CliError::Usage(format!("MSR_SEED: {e}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coefficient_lists() {
        let z = parse_coeffs("0, 0.6, -0.8i").unwrap();
        assert_eq!(z, vec![Complex64::new(0.0, 0.0), Complex64::new(0.6, 0.0), Complex64::new(0.0, -0.8)]);
        assert_eq!(parse_coeffs("1+2i").unwrap(), vec![Complex64::new(1.0, 2.0)]);
        assert!(parse_coeffs("1,,0").is_err());
        assert!(parse_coeffs("1,x").is_err());
        assert!(parse_coeffs("inf,0").is_err());
    }

    #[test]
    fn g_csv() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("g.csv");
        fs::write(&p, "s,g\n0,1\n0.5,0.9\n1,1\n").unwrap();
        assert_eq!(read_g_csv(&p, 1.0).unwrap(), vec![1.0, 0.9, 1.0]);
        assert!(read_g_csv(&p, 2.0).is_err());
        fs::write(&p, "t,g\n0,1\n1,1\n").unwrap();
        assert!(read_g_csv(&p, 1.0).is_err());
        fs::write(&p, "s,g\n0,1\n1,oops\n").unwrap();
        assert!(read_g_csv(&p, 1.0).is_err());
    }
}
