//! Small fully connected networks with exact reverse-mode gradients.
//!
//! Hidden layers use LeakyReLU (configurable negative slope, default 0.01);
//! the output layer uses tanh or identity. Shape mismatches panic with the
//! offending shapes — callers validate dimensions at their own boundaries.

use super::{Matrix, Rng};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputActivation {
    Tanh,
    Identity,
}

pub const DEFAULT_LEAKY_SLOPE: f64 = 0.01;

#[derive(Debug, Clone)]
pub struct Mlp {
    weights: Vec<Matrix>,
    biases: Vec<Vec<f64>>,
    leaky_slope: f64,
    output_activation: OutputActivation,
}

/// Forward-pass intermediates needed by [`Mlp::backward`]:
/// `activations[k]` is the input to layer `k` (`activations[0]` is `x`),
/// `preacts[k]` the affine output of layer `k` before its activation.
#[derive(Debug, Clone)]
pub struct MlpCache {
    activations: Vec<Vec<f64>>,
    preacts: Vec<Vec<f64>>,
}

impl MlpCache {
    pub fn output(&self) -> &[f64] {
        self.activations.last().expect("cache has output")
    }
}

/// Parameter gradients with the same shapes as the network they came from.
#[derive(Debug, Clone)]
pub struct MlpGrads {
    pub weights: Vec<Matrix>,
    pub biases: Vec<Vec<f64>>,
}

impl MlpGrads {
    pub fn zeros_like(net: &Mlp) -> Self {
        MlpGrads {
            weights: net
                .weights
                .iter()
                .map(|w| Matrix::zeros(w.rows(), w.cols()))
                .collect(),
            biases: net.biases.iter().map(|b| vec![0.0; b.len()]).collect(),
        }
    }

    /// `self += a * other`.
    pub fn axpy(&mut self, a: f64, other: &MlpGrads) {
        for (w, ow) in self.weights.iter_mut().zip(&other.weights) {
            for (x, y) in w.data_mut().iter_mut().zip(ow.data()) {
                *x += a * y;
            }
        }
        for (b, ob) in self.biases.iter_mut().zip(&other.biases) {
            for (x, y) in b.iter_mut().zip(ob) {
                *x += a * y;
            }
        }
    }

    pub fn scale(&mut self, a: f64) {
        for w in &mut self.weights {
            for x in w.data_mut() {
                *x *= a;
            }
        }
        for b in &mut self.biases {
            for x in b.iter_mut() {
                *x *= a;
            }
        }
    }

    pub fn append_to(&self, out: &mut Vec<f64>) {
        for (w, b) in self.weights.iter().zip(&self.biases) {
            out.extend_from_slice(w.data());
            out.extend_from_slice(b);
        }
    }

    pub fn norm_sq(&self) -> f64 {
        let w: f64 = self
            .weights
            .iter()
            .flat_map(|w| w.data())
            .map(|x| x * x)
            .sum();
        let b: f64 = self.biases.iter().flatten().map(|x| x * x).sum();
        w + b
    }
}

impl Mlp {
    /// All-zero parameters. `dims` lists layer widths, e.g. `[4, 16, 16, 3]`
    /// builds three layers (4→16→16→3).
    pub fn zeros(dims: &[usize], output: OutputActivation, leaky_slope: f64) -> Self {
        assert!(dims.len() >= 2, "need at least one layer");
        assert!(dims.iter().all(|&d| d > 0), "zero-width layer");
        let weights = dims
            .windows(2)
            .map(|w| Matrix::zeros(w[1], w[0]))
            .collect();
        let biases = dims.windows(2).map(|w| vec![0.0; w[1]]).collect();
        Mlp {
            weights,
            biases,
            leaky_slope,
            output_activation: output,
        }
    }

    /// Uniform init in `(-a, a)` with `a = weight_scale / sqrt(fan_in)`;
    /// biases start at zero.
    pub fn random(
        dims: &[usize],
        output: OutputActivation,
        leaky_slope: f64,
        weight_scale: f64,
        rng: &mut Rng,
    ) -> Self {
        let mut net = Mlp::zeros(dims, output, leaky_slope);
        for w in &mut net.weights {
            let a = weight_scale / (w.cols() as f64).sqrt();
            for v in w.data_mut() {
                *v = rng.range(-a, a);
            }
        }
        net
    }

    pub fn n_layers(&self) -> usize {
        self.weights.len()
    }

    pub fn in_dim(&self) -> usize {
        self.weights[0].cols()
    }

    pub fn out_dim(&self) -> usize {
        self.weights.last().expect("nonempty").rows()
    }

    pub fn output_activation(&self) -> OutputActivation {
        self.output_activation
    }

    pub fn leaky_slope(&self) -> f64 {
        self.leaky_slope
    }

    pub fn layer(&self, k: usize) -> (&Matrix, &[f64]) {
        (&self.weights[k], &self.biases[k])
    }

    pub fn layer_mut(&mut self, k: usize) -> (&mut Matrix, &mut Vec<f64>) {
        (&mut self.weights[k], &mut self.biases[k])
    }

    /// Zero the last layer's weights and bias, making the net output exactly 0
    /// (tanh(0) = 0) regardless of the hidden layers.
    pub fn zero_output_layer(&mut self) {
        let last = self.weights.len() - 1;
        self.weights[last].data_mut().fill(0.0);
        self.biases[last].fill(0.0);
    }

    #[inline]
    fn hidden(&self, z: f64) -> f64 {
        if z > 0.0 {
            z
        } else {
            self.leaky_slope * z
        }
    }

    #[inline]
    fn hidden_deriv(&self, z: f64) -> f64 {
        if z > 0.0 {
            1.0
        } else {
            self.leaky_slope
        }
    }

    pub fn forward(&self, x: &[f64]) -> Vec<f64> {
        self.forward_cached(x).activations.pop().expect("output")
    }

    pub fn forward_cached(&self, x: &[f64]) -> MlpCache {
        assert_eq!(
            x.len(),
            self.in_dim(),
            "mlp input width mismatch: net expects {}, got {}",
            self.in_dim(),
            x.len()
        );
        let n = self.n_layers();
        let mut activations = Vec::with_capacity(n + 1);
        let mut preacts = Vec::with_capacity(n);
        activations.push(x.to_vec());
        for k in 0..n {
            let mut z = self.weights[k].matvec(activations.last().expect("prev"));
            for (zi, bi) in z.iter_mut().zip(&self.biases[k]) {
                *zi += bi;
            }
            let a = if k + 1 == n {
                match self.output_activation {
                    OutputActivation::Tanh => z.iter().map(|v| v.tanh()).collect(),
                    OutputActivation::Identity => z.clone(),
                }
            } else {
                z.iter().map(|v| self.hidden(*v)).collect()
            };
            preacts.push(z);
            activations.push(a);
        }
        MlpCache {
            activations,
            preacts,
        }
    }

    /// Exact reverse-mode gradients of `upstream · output` with respect to all
    /// parameters and the input.
    pub fn backward(&self, cache: &MlpCache, upstream: &[f64]) -> (MlpGrads, Vec<f64>) {
        assert_eq!(
            upstream.len(),
            self.out_dim(),
            "upstream width mismatch: net outputs {}, got {}",
            self.out_dim(),
            upstream.len()
        );
        let n = self.n_layers();
        let mut grads = MlpGrads::zeros_like(self);

        // delta at the output layer.
        let mut delta: Vec<f64> = match self.output_activation {
            OutputActivation::Tanh => {
                let out = cache.output();
                upstream
                    .iter()
                    .zip(out)
                    .map(|(u, a)| u * (1.0 - a * a))
                    .collect()
            }
            OutputActivation::Identity => upstream.to_vec(),
        };

        for k in (0..n).rev() {
            grads.weights[k].add_outer(1.0, &delta, &cache.activations[k]);
            for (g, d) in grads.biases[k].iter_mut().zip(&delta) {
                *g += d;
            }
            let back = self.weights[k].matvec_transpose(&delta);
            if k == 0 {
                return (grads, back);
            }
            delta = back
                .iter()
                .zip(&cache.preacts[k - 1])
                .map(|(b, z)| b * self.hidden_deriv(*z))
                .collect();
        }
        unreachable!("loop returns at k == 0");
    }

    pub fn param_count(&self) -> usize {
        self.weights
            .iter()
            .map(|w| w.rows() * w.cols())
            .sum::<usize>()
            + self.biases.iter().map(Vec::len).sum::<usize>()
    }

    /// Append all parameters (per layer: weights row-major, then bias).
    pub fn append_params(&self, out: &mut Vec<f64>) {
        for (w, b) in self.weights.iter().zip(&self.biases) {
            out.extend_from_slice(w.data());
            out.extend_from_slice(b);
        }
    }

    /// Load parameters in `append_params` order, consuming from the front of
    /// the slice.
    pub fn load_params(&mut self, src: &mut &[f64]) {
        for (w, b) in self.weights.iter_mut().zip(&mut self.biases) {
            let nw = w.rows() * w.cols();
            w.data_mut().copy_from_slice(&src[..nw]);
            *src = &src[nw..];
            b.copy_from_slice(&src[..b.len()]);
            *src = &src[b.len()..];
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{check_grad, rel_err};

    #[test]
    fn zero_net_with_tanh_outputs_zero() {
        let net = Mlp::zeros(&[3, 5, 5, 2], OutputActivation::Tanh, 0.01);
        let y = net.forward(&[1.0, -2.0, 0.5]);
        assert_eq!(y, vec![0.0, 0.0]);
    }

    #[test]
    fn identity_single_layer_passes_through() {
        let mut net = Mlp::zeros(&[2, 2], OutputActivation::Identity, 0.01);
        let (w, _) = net.layer_mut(0);
        w.set(0, 0, 1.0);
        w.set(1, 1, 1.0);
        assert_eq!(net.forward(&[2.0, -3.0]), vec![2.0, -3.0]);
    }

    // Independent straight-line replay of the forward formula, kept free of
    // the Matrix/Mlp machinery it checks.
    fn replay_forward(net: &Mlp, x: &[f64]) -> Vec<f64> {
        let mut a = x.to_vec();
        for k in 0..net.n_layers() {
            let (w, b) = net.layer(k);
            let mut z = vec![0.0; w.rows()];
            for i in 0..w.rows() {
                let mut acc = b[i];
                for j in 0..w.cols() {
                    acc += w.get(i, j) * a[j];
                }
                z[i] = acc;
            }
            let last = k + 1 == net.n_layers();
            a = z
                .iter()
                .map(|&v| {
                    if last {
                        match net.output_activation() {
                            OutputActivation::Tanh => v.tanh(),
                            OutputActivation::Identity => v,
                        }
                    } else if v > 0.0 {
                        v
                    } else {
                        net.leaky_slope() * v
                    }
                })
                .collect();
        }
        a
    }

    #[test]
    fn fixed_seed_forward_matches_straight_line_replay() {
        let mut rng = Rng::new(2024);
        let net = Mlp::random(&[6, 9, 9, 4], OutputActivation::Tanh, 0.01, 1.0, &mut rng);
        let mut x = vec![0.0; 6];
        x[0] = 1.0;
        let got = net.forward(&x);
        let want = replay_forward(&net, &x);
        for (g, w) in got.iter().zip(&want) {
            assert!(rel_err(*g, *w) < 1e-14, "{g} vs {w}");
        }
    }

    #[test]
    fn zero_upstream_gives_zero_grads() {
        let mut rng = Rng::new(1);
        let net = Mlp::random(&[4, 6, 3], OutputActivation::Tanh, 0.01, 1.0, &mut rng);
        let x = rng.normal_vec(4);
        let cache = net.forward_cached(&x);
        let (grads, dx) = net.backward(&cache, &[0.0, 0.0, 0.0]);
        assert_eq!(grads.norm_sq(), 0.0);
        assert!(dx.iter().all(|v| *v == 0.0));
    }

    #[test]
    fn linear_layer_grads_are_analytic() {
        // y = Wx + b: dW = u xᵀ, db = u, dx = Wᵀ u.
        let mut rng = Rng::new(8);
        let net = Mlp::random(&[3, 2], OutputActivation::Identity, 0.01, 1.0, &mut rng);
        let x = [0.5, -1.5, 2.0];
        let u = [2.0, -1.0];
        let cache = net.forward_cached(&x);
        let (grads, dx) = net.backward(&cache, &u);
        let (w, _) = net.layer(0);
        for i in 0..2 {
            assert_eq!(grads.biases[0][i], u[i]);
            for j in 0..3 {
                assert_eq!(grads.weights[0].get(i, j), u[i] * x[j]);
            }
        }
        for j in 0..3 {
            let want = (0..2).map(|i| w.get(i, j) * u[i]).sum::<f64>();
            assert!(rel_err(dx[j], want) < 1e-14);
        }
    }

    #[test]
    fn three_layer_grads_match_finite_differences() {
        let mut rng = Rng::new(77);
        let net = Mlp::random(&[6, 8, 8, 5], OutputActivation::Tanh, 0.01, 1.0, &mut rng);
        let x = rng.normal_vec(6);
        let upstream = rng.normal_vec(5);
        check_grad(&net, &x, &upstream, 1e-6, 1e-4);
    }

    #[test]
    fn grads_match_finite_differences_across_many_seeds() {
        // Gradient-correctness sweep: 100 random configurations.
        for seed in 0..100u64 {
            let mut rng = Rng::new(seed);
            let hidden = 3 + (seed as usize % 6);
            let output = if seed % 2 == 0 {
                OutputActivation::Tanh
            } else {
                OutputActivation::Identity
            };
            let net = Mlp::random(&[4, hidden, 3], output, 0.01, 1.2, &mut rng);
            let x = rng.normal_vec(4);
            let upstream = rng.normal_vec(3);
            check_grad(&net, &x, &upstream, 1e-6, 1e-4);
        }
    }

    #[test]
    #[should_panic(expected = "input width mismatch")]
    fn forward_rejects_bad_width() {
        let net = Mlp::zeros(&[3, 2], OutputActivation::Identity, 0.01);
        net.forward(&[1.0]);
    }
}
