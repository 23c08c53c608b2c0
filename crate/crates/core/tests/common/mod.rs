#![allow(dead_code)]

use nalgebra::DMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sbath_core::{Complex64, Coupling, NetworkSpec, Node};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random valid network: `n` nodes (system first), frequencies in
/// [5.8, 7.6], losses in [1e-4, 5e-2], couplings |J| in [0.05, 0.6] on a
/// random edge set. The system always couples to at least one bath node.
pub fn random_network(rng: &mut impl Rng, n: usize) -> NetworkSpec {
    let labels: Vec<String> = (0..n)
        .map(|i| if i == 0 { "S".to_string() } else { format!("B{i}") })
        .collect();
    let nodes = labels
        .iter()
        .enumerate()
        .map(|(i, l)| {
            let gamma = if i == 0 { 0.0 } else { rng.random_range(1e-4..5e-2) };
            Node::new(l.clone(), rng.random_range(5.8..7.6), gamma)
        })
        .collect();
    let mut couplings = Vec::new();
    let forced = rng.random_range(1..n);
    for i in 0..n {
        for j in i + 1..n {
            if (i == 0 && j == forced) || rng.random_bool(0.5) {
                let mag = rng.random_range(0.05..0.6);
                let sign = if rng.random_bool(0.5) { 1.0 } else { -1.0 };
                couplings.push(Coupling::new(labels[i].clone(), labels[j].clone(), sign * mag));
            }
        }
    }
    NetworkSpec::new(nodes, "S", couplings)
}

/// Self-energy recovered from the (S,S) entry of a dense inverse.
pub fn sigma_from_oracle(spec: &NetworkSpec, omega: f64) -> Complex64 {
    let g = sbath_core::full_resolvent_oracle(spec, omega).unwrap();
    let ws = spec.node(&spec.system).unwrap().omega;
    Complex64::new(omega - ws, 0.0) - g[(0, 0)].inv()
}

/// First diagonal entry of `(z I − T)⁻¹` for the tridiagonal chain matrix,
/// by dense LU (nalgebra).
pub fn tridiagonal_resolvent00(eps: &[f64], hop: &[f64], z: Complex64) -> Complex64 {
    let n = eps.len();
    let a = DMatrix::from_fn(n, n, |i, j| {
        if i == j {
            z - eps[i]
        } else if i + 1 == j {
            Complex64::new(-hop[i], 0.0)
        } else if j + 1 == i {
            Complex64::new(-hop[j], 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    });
    let mut e0 = nalgebra::DVector::zeros(n);
    e0[0] = Complex64::new(1.0, 0.0);
    a.lu().solve(&e0).unwrap()[0]
}

const GL_NODES: [f64; 5] = [
    0.0,
    -0.538_469_310_105_683_1,
    0.538_469_310_105_683_1,
    -0.906_179_845_938_664,
    0.906_179_845_938_664,
];
const GL_WEIGHTS: [f64; 5] = [
    0.568_888_888_888_888_9,
    0.478_628_670_499_366_5,
    0.478_628_670_499_366_5,
    0.236_926_885_056_189_1,
    0.236_926_885_056_189_1,
];

/// Composite 5-point Gauss–Legendre rule on `panels` equal panels of [a, b].
pub fn gauss_legendre(f: impl Fn(f64) -> Complex64, a: f64, b: f64, panels: usize) -> Complex64 {
    let h = (b - a) / panels as f64;
    let mut sum = Complex64::new(0.0, 0.0);
    for p in 0..panels {
        let mid = a + h * (p as f64 + 0.5);
        for (x, w) in GL_NODES.iter().zip(GL_WEIGHTS) {
            sum += f(mid + 0.5 * h * x) * w;
        }
    }
    sum * (0.5 * h)
}
