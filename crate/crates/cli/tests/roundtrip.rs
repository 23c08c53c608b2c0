use std::io::BufReader;

use proptest::prelude::*;
use sbath_cli::format::{fmt_f64, parse_f64, read_ridge, write_ridge};
use sbath_cli::GridFile;

fn cell() -> impl Strategy<Value = Option<f64>> {
    prop_oneof![Just(None), any::<f64>().prop_filter("finite", |x| x.is_finite()).prop_map(Some)]
}

proptest! {
    #[test]
    fn floats_round_trip(x in any::<f64>().prop_filter("not nan", |x| !x.is_nan())) {
        prop_assert_eq!(parse_f64(&fmt_f64(x)).unwrap().to_bits(), x.to_bits());
    }

    #[test]
    fn grid_round_trip(rows in 1usize..5, cols in 1usize..7, cells in prop::collection::vec(cell(), 35)) {
        let g = GridFile {
            preset: "C3".into(),
            axis: "gamma2".into(),
            pump: None,
            axis_values: (0..rows).map(|k| 1e-3 * (k as f64 + 1.0) / 3.0).collect(),
            omega: (0..cols).map(|k| 5.8 + k as f64 / 7.0).collect(),
            gains: (0..rows).map(|r| cells[r * cols..(r + 1) * cols].to_vec()).collect(),
        };
        let mut buf = Vec::new();
        g.write(&mut buf).unwrap();
        prop_assert_eq!(GridFile::read(BufReader::new(&buf[..])).unwrap(), g);
    }

    #[test]
    fn ridge_round_trip(ridge in prop::collection::vec(cell(), 1..20)) {
        let axis: Vec<f64> = (0..ridge.len()).map(|k| k as f64 * 0.05).collect();
        let mut buf = Vec::new();
        write_ridge(&axis, &ridge, &mut buf).unwrap();
        let back = read_ridge(BufReader::new(&buf[..])).unwrap();
        prop_assert_eq!(back, axis.into_iter().zip(ridge).collect::<Vec<_>>());
    }
}
