//! 8-bit graymap rendering of gain grids (binary PGM).
//!
//! Rows are axis values (first value on top), columns are frequencies. The
//! smallest cell maps to 0 and the largest to 255, affinely in the value or
//! in `log10` of it. Missing cells render as 0. A constant grid renders
//! uniformly at 128, or at 0 when the constant is zero.

use std::io::Write;
use std::str::FromStr;

use crate::error::{CliError, CliResult};
use crate::grid::GridFile;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ColorScale {
    #[default]
    Linear,
    Log,
}

impl FromStr for ColorScale {
    type Err = CliError;

    fn from_str(s: &str) -> CliResult<Self> {
        match s {
            "linear" => Ok(ColorScale::Linear),
            "log" => Ok(ColorScale::Log),
            _ => Err(CliError::usage(format!("unknown color scale `{s}` (linear|log)"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graymap {
    pub width: usize,
    pub height: usize,
    /// Row-major, `height × width`.
    pub pixels: Vec<u8>,
}

impl Graymap {
    pub fn pixel(&self, row: usize, col: usize) -> u8 {
        self.pixels[row * self.width + col]
    }

    pub fn write_pgm(&self, mut w: impl Write) -> CliResult<()> {
        write!(w, "P5\n{} {}\n255\n", self.width, self.height)?;
        w.write_all(&self.pixels)?;
        w.flush()?;
        Ok(())
    }
}

pub fn render_heatmap(grid: &GridFile, scale: ColorScale) -> CliResult<Graymap> {
    let (height, width) = (grid.rows(), grid.cols());
    if height == 0 || width == 0 {
        return Err(CliError::usage("cannot render an empty grid"));
    }
    let transform = |v: f64| match scale {
        ColorScale::Linear => v,
        ColorScale::Log => v.log10(),
    };
    let cells: Vec<Option<f64>> = grid.gains.iter().flatten().copied().collect();
    if scale == ColorScale::Log && cells.iter().flatten().any(|&v| !(v > 0.0)) {
        return Err(CliError::usage("log scale needs strictly positive gains"));
    }
    let present: Vec<f64> = cells.iter().flatten().map(|&v| transform(v)).collect();
    let Some(lo) = present.iter().copied().reduce(f64::min) else {
        return Ok(Graymap {
            width,
            height,
            pixels: vec![0; width * height],
        });
    };
    let hi = present.iter().copied().fold(lo, f64::max);
    let raw_constant = cells.iter().flatten().next().copied().unwrap_or(0.0);

    let pixels = cells
        .iter()
        .map(|c| match c {
            None => 0,
            Some(_) if hi == lo => {
                if raw_constant == 0.0 {
                    0
                } else {
                    128
                }
            }
            Some(v) => (255.0 * (transform(*v) - lo) / (hi - lo)).round().clamp(0.0, 255.0) as u8,
        })
        .collect();
    Ok(Graymap {
        width,
        height,
        pixels,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid(gains: Vec<Vec<Option<f64>>>) -> GridFile {
        GridFile {
            preset: "t".into(),
            axis: "gamma1".into(),
            pump: None,
            axis_values: (0..gains.len()).map(|k| k as f64).collect(),
            omega: (0..gains[0].len()).map(|k| k as f64).collect(),
            gains,
        }
    }

    #[test]
    fn affine_two_by_two() {
        let g = grid(vec![vec![Some(0.0), Some(1.0)], vec![Some(2.0), Some(3.0)]]);
        let img = render_heatmap(&g, ColorScale::Linear).unwrap();
        assert_eq!(img.pixels, vec![0, 85, 170, 255]);
    }

    #[test]
    fn constant_grids() {
        let img = render_heatmap(&grid(vec![vec![Some(4.0); 3]; 2]), ColorScale::Linear).unwrap();
        assert!(img.pixels.iter().all(|&p| p == 128));
        let img = render_heatmap(&grid(vec![vec![Some(0.0); 3]; 2]), ColorScale::Linear).unwrap();
        assert!(img.pixels.iter().all(|&p| p == 0));
    }

    #[test]
    fn log_scale() {
        let g = grid(vec![vec![Some(1.0), Some(10.0), Some(100.0), None]]);
        let img = render_heatmap(&g, ColorScale::Log).unwrap();
        assert_eq!(img.pixels, vec![0, 128, 255, 0]);
        let bad = grid(vec![vec![Some(0.0), Some(1.0)]]);
        assert!(render_heatmap(&bad, ColorScale::Log).is_err());
    }

    #[test]
    fn pgm_header() {
        let img = render_heatmap(&grid(vec![vec![Some(0.0), Some(1.0)]]), ColorScale::Linear).unwrap();
        let mut buf = Vec::new();
        img.write_pgm(&mut buf).unwrap();
        assert_eq!(&buf[..11], b"P5\n2 1\n255\n");
        assert_eq!(&buf[11..], &[0, 255]);
    }
}
