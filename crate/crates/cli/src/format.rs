//! Delimited-text tables: spectrum traces, comparator traces and ridge
//! sidecars. Numbers are written with 17 significant digits so every value
//! reads back bit-for-bit.

use std::io::{BufRead, Write};

use sbath_core::{Complex64, SelfEnergySample, SpectrumTrace};

use crate::error::{CliError, CliResult};

pub const SPECTRUM_HEADER: &str =
    "omega_ghz,re_sigma,im_sigma,re_gss,im_gss,re_gtransfer,im_gtransfer,gain";
pub const COMPARE_HEADER: &str = "omega_ghz,re_sigma,im_sigma";
pub const RIDGE_HEADER: &str = "axis_value,ridge_omega_ghz";

/// Lossless text form of a float; missing values are `nan`.
pub fn fmt_f64(x: f64) -> String {
    if x.is_nan() {
        "nan".to_string()
    } else {
        format!("{x:.16e}")
    }
}

pub fn parse_f64(s: &str) -> CliResult<f64> {
    s.trim()
        .parse()
        .map_err(|_| CliError::format(format!("not a number: `{s}`")))
}

fn join(values: impl IntoIterator<Item = f64>) -> String {
    values.into_iter().map(fmt_f64).collect::<Vec<_>>().join(",")
}

pub fn fmt_row(values: impl IntoIterator<Item = f64>) -> String {
    join(values)
}

pub fn parse_row(line: &str) -> CliResult<Vec<f64>> {
    if line.trim().is_empty() {
        return Ok(vec![]);
    }
    line.split(',').map(parse_f64).collect()
}

/// Reads a table with a fixed header, returning one vector per data line.
fn read_table(r: impl BufRead, header: &str) -> CliResult<Vec<Vec<f64>>> {
    let mut lines = r.lines();
    let first = lines.next().transpose()?.unwrap_or_default();
    if first.trim_end() != header {
        return Err(CliError::format(format!("expected header `{header}`, found `{first}`")));
    }
    let width = header.split(',').count();
    let mut rows = Vec::new();
    for (k, line) in lines.enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let row = parse_row(&line)?;
        if row.len() != width {
            return Err(CliError::format(format!(
                "line {}: expected {width} columns, found {}",
                k + 2,
                row.len()
            )));
        }
        rows.push(row);
    }
    Ok(rows)
}

pub fn write_spectrum(trace: &SpectrumTrace, mut w: impl Write) -> CliResult<()> {
    if trace.samples.is_empty() {
        return Err(CliError::usage("spectrum trace is empty"));
    }
    writeln!(w, "{SPECTRUM_HEADER}")?;
    for s in &trace.samples {
        let row = [
            s.omega,
            s.sigma.re,
            s.sigma.im,
            s.g_ss.re,
            s.g_ss.im,
            s.g_transfer.re,
            s.g_transfer.im,
            s.gain,
        ];
        writeln!(w, "{}", join(row))?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_spectrum(r: impl BufRead) -> CliResult<Vec<SelfEnergySample>> {
    Ok(read_table(r, SPECTRUM_HEADER)?
        .into_iter()
        .map(|v| SelfEnergySample {
            omega: v[0],
            sigma: Complex64::new(v[1], v[2]),
            g_ss: Complex64::new(v[3], v[4]),
            g_transfer: Complex64::new(v[5], v[6]),
            gain: v[7],
        })
        .collect())
}

pub fn write_compare(rows: &[(f64, Complex64)], mut w: impl Write) -> CliResult<()> {
    writeln!(w, "{COMPARE_HEADER}")?;
    for (omega, s) in rows {
        writeln!(w, "{}", join([*omega, s.re, s.im]))?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_compare(r: impl BufRead) -> CliResult<Vec<(f64, Complex64)>> {
    Ok(read_table(r, COMPARE_HEADER)?
        .into_iter()
        .map(|v| (v[0], Complex64::new(v[1], v[2])))
        .collect())
}

pub fn write_ridge(axis_values: &[f64], ridge: &[Option<f64>], mut w: impl Write) -> CliResult<()> {
    writeln!(w, "{RIDGE_HEADER}")?;
    for (v, r) in axis_values.iter().zip(ridge) {
        writeln!(w, "{}", join([*v, r.unwrap_or(f64::NAN)]))?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_ridge(r: impl BufRead) -> CliResult<Vec<(f64, Option<f64>)>> {
    Ok(read_table(r, RIDGE_HEADER)?
        .into_iter()
        .map(|v| (v[0], Some(v[1]).filter(|x| !x.is_nan())))
        .collect())
}
