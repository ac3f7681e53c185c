//! Adam with bias correction over a flat parameter vector.

/// Optimizer hyperparameters. Defaults: β₁ = 0.9, β₂ = 0.999, lr = 1e-4,
/// ε = 1e-8.
#[derive(Debug, Clone, Copy)]
pub struct Adam {
    pub lr: f64,
    pub beta1: f64,
    pub beta2: f64,
    pub eps: f64,
}

impl Default for Adam {
    fn default() -> Self {
        Adam {
            lr: 1e-4,
            beta1: 0.9,
            beta2: 0.999,
            eps: 1e-8,
        }
    }
}

/// Moment buffers; shapes must match the parameter vector they serve.
#[derive(Debug, Clone)]
pub struct AdamState {
    pub m: Vec<f64>,
    pub v: Vec<f64>,
    pub t: u64,
}

impl AdamState {
    pub fn new(n_params: usize) -> Self {
        AdamState {
            m: vec![0.0; n_params],
            v: vec![0.0; n_params],
            t: 0,
        }
    }
}

impl Adam {
    /// One update: `m, v` moment tracking, bias correction, then
    /// `p -= lr * m̂ / (sqrt(v̂) + eps)`.
    pub fn step(&self, state: &mut AdamState, params: &mut [f64], grads: &[f64]) {
        assert_eq!(params.len(), state.m.len(), "adam state shape mismatch");
        assert_eq!(params.len(), grads.len(), "adam grads shape mismatch");
        state.t += 1;
        let bc1 = 1.0 - self.beta1.powi(state.t as i32);
        let bc2 = 1.0 - self.beta2.powi(state.t as i32);
        for i in 0..params.len() {
            let g = grads[i];
            state.m[i] = self.beta1 * state.m[i] + (1.0 - self.beta1) * g;
            state.v[i] = self.beta2 * state.v[i] + (1.0 - self.beta2) * g * g;
            let m_hat = state.m[i] / bc1;
            let v_hat = state.v[i] / bc2;
            params[i] -= self.lr * m_hat / (v_hat.sqrt() + self.eps);
        }
    }
}
