//! Conjugate Bayesian models and posterior scenario generation.
//!
//! Two conjugate pairs cover every experiment: Gamma prior on an exponential
//! rate, and Dirichlet prior on a categorical mass vector over a finite
//! support. Multi-dimensional problems use a product of independent
//! one-dimensional models. Updates are closed form, so composing two updates
//! equals one update with the concatenated data, exactly.

use crate::distributions::{
    sample_dirichlet, sample_exponential, sample_gamma, DistributionError,
};
use crate::stream::RandomStream;
use thiserror::Error;

/// Errors raised by model construction, updating and sampling.
#[derive(Debug, Error)]
pub enum PosteriorError {
    #[error("observation {value} lies outside the support of {family}")]
    DataOutsideSupport { family: &'static str, value: f64 },
    #[error("dimension mismatch: model has dimension {expected}, data has {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("invalid hyperparameters: {0}")]
    InvalidHyper(String),
    #[error("scenario counts must both be at least 1")]
    EmptyScenarioRequest,
    #[error("invalid model config: {0}")]
    InvalidConfig(String),
    #[error(transparent)]
    Distribution(#[from] DistributionError),
}

/// One posterior parameter draw.
#[derive(Debug, Clone, PartialEq)]
pub enum Theta {
    /// Exponential rate.
    Rate(f64),
    /// Categorical mass vector, aligned with the model's support.
    Probs(Vec<f64>),
    /// Independent per-dimension draws.
    Product(Vec<Theta>),
}

impl Theta {
    /// The rate of a scalar exponential draw.
    pub fn as_rate(&self) -> Option<f64> {
        match self {
            Theta::Rate(r) => Some(*r),
            _ => None,
        }
    }

    /// The mass vector of a categorical draw.
    pub fn as_probs(&self) -> Option<&[f64]> {
        match self {
            Theta::Probs(p) => Some(p),
            _ => None,
        }
    }

    /// Per-dimension components of a product draw.
    pub fn as_product(&self) -> Option<&[Theta]> {
        match self {
            Theta::Product(parts) => Some(parts),
            _ => None,
        }
    }
}

/// Observations as an `n × dim` row-major matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct DataSet {
    dim: usize,
    values: Vec<f64>,
}

impl DataSet {
    /// One-dimensional data.
    pub fn from_scalars(values: Vec<f64>) -> Self {
        Self { dim: 1, values }
    }

    /// Multi-dimensional data from equal-length rows.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self, PosteriorError> {
        let dim = rows.first().map_or(1, Vec::len);
        let mut values = Vec::with_capacity(rows.len() * dim);
        for row in rows {
            if row.len() != dim {
                return Err(PosteriorError::DimensionMismatch {
                    expected: dim,
                    got: row.len(),
                });
            }
            values.extend_from_slice(row);
        }
        Ok(Self { dim, values })
    }

    pub fn n(&self) -> usize {
        self.values.len() / self.dim
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.values[i * self.dim..(i + 1) * self.dim]
    }

    /// Values of one coordinate across all observations.
    pub fn column(&self, d: usize) -> Vec<f64> {
        (0..self.n()).map(|i| self.row(i)[d]).collect()
    }

    /// The raw values when the data is one-dimensional.
    pub fn as_scalars(&self) -> Option<&[f64]> {
        (self.dim == 1).then_some(&self.values[..])
    }

    /// FNV-1a hash of the bit patterns; used for the shared-data contract in
    /// the evaluation harness.
    pub fn digest(&self) -> u64 {
        fnv1a(self.dim as u64, &self.values)
    }
}

pub(crate) fn fnv1a(seed: u64, values: &[f64]) -> u64 {
    let mut h = 0xcbf2_9ce4_8422_2325u64 ^ seed;
    for v in values {
        for byte in v.to_bits().to_le_bytes() {
            h ^= byte as u64;
            h = h.wrapping_mul(0x1000_0000_01b3);
        }
    }
    h
}

/// A conjugate Bayesian model: prior and posterior hyperparameters plus the
/// conditional scenario law `f(·|θ)`.
#[derive(Debug, Clone, PartialEq)]
pub enum BayesModel {
    /// Gamma(a, b) prior on the rate of an exponential scenario law.
    GammaExponential {
        prior: (f64, f64),
        posterior: (f64, f64),
        n_observed: usize,
    },
    /// Dirichlet(α) prior on a categorical law over `support`.
    DirichletCategorical {
        support: Vec<f64>,
        prior: Vec<f64>,
        posterior: Vec<f64>,
        n_observed: usize,
    },
    /// Independent one-dimensional models, one per coordinate.
    Product(Vec<BayesModel>),
}

impl BayesModel {
    /// Gamma(a, b) prior for an exponential rate.
    pub fn gamma_exponential(a: f64, b: f64) -> Result<Self, PosteriorError> {
        if !(a > 0.0 && b > 0.0) {
            return Err(PosteriorError::InvalidHyper(format!(
                "gamma hyperparameters must be positive, got ({a}, {b})"
            )));
        }
        Ok(BayesModel::GammaExponential {
            prior: (a, b),
            posterior: (a, b),
            n_observed: 0,
        })
    }

    /// The paper-default Gamma(1, 1) prior.
    pub fn default_exponential() -> Self {
        Self::gamma_exponential(1.0, 1.0).expect("(1,1) is valid")
    }

    /// Dirichlet(α) prior over a strictly increasing finite support.
    pub fn dirichlet_categorical(
        support: Vec<f64>,
        alphas: Vec<f64>,
    ) -> Result<Self, PosteriorError> {
        if support.is_empty() || support.len() != alphas.len() {
            return Err(PosteriorError::InvalidHyper(format!(
                "support ({}) and alpha ({}) lengths must match and be non-empty",
                support.len(),
                alphas.len()
            )));
        }
        if support.windows(2).any(|w| w[0] >= w[1]) {
            return Err(PosteriorError::InvalidHyper(
                "support must be strictly increasing".into(),
            ));
        }
        if alphas.iter().any(|&a| a <= 0.0) {
            return Err(PosteriorError::InvalidHyper(
                "all Dirichlet hyperparameters must be positive".into(),
            ));
        }
        Ok(BayesModel::DirichletCategorical {
            support,
            prior: alphas.clone(),
            posterior: alphas,
            n_observed: 0,
        })
    }

    /// The uninformative all-ones Dirichlet prior.
    pub fn uniform_dirichlet(support: Vec<f64>) -> Result<Self, PosteriorError> {
        let n = support.len();
        Self::dirichlet_categorical(support, vec![1.0; n])
    }

    /// Independent product of one-dimensional models.
    pub fn product(parts: Vec<BayesModel>) -> Result<Self, PosteriorError> {
        if parts.is_empty() {
            return Err(PosteriorError::InvalidHyper("empty product".into()));
        }
        if parts.iter().any(|p| matches!(p, BayesModel::Product(_))) {
            return Err(PosteriorError::InvalidHyper(
                "product parts must be one-dimensional models".into(),
            ));
        }
        Ok(BayesModel::Product(parts))
    }

    pub fn dimension(&self) -> usize {
        match self {
            BayesModel::Product(parts) => parts.len(),
            _ => 1,
        }
    }

    pub fn n_observed(&self) -> usize {
        match self {
            BayesModel::GammaExponential { n_observed, .. }
            | BayesModel::DirichletCategorical { n_observed, .. } => *n_observed,
            BayesModel::Product(parts) => parts[0].n_observed(),
        }
    }

    fn support_index(support: &[f64], value: f64) -> Option<usize> {
        support
            .iter()
            .position(|&s| (s - value).abs() <= 1e-9 * s.abs().max(1.0))
    }

    /// Closed-form conjugate posterior update.
    pub fn update(&self, data: &DataSet) -> Result<BayesModel, PosteriorError> {
        if data.dim() != self.dimension() {
            return Err(PosteriorError::DimensionMismatch {
                expected: self.dimension(),
                got: data.dim(),
            });
        }
        match self {
            BayesModel::GammaExponential {
                prior,
                posterior: (a, b),
                n_observed,
            } => {
                let values = data.as_scalars().expect("dim checked");
                if let Some(&bad) = values.iter().find(|&&v| v <= 0.0) {
                    return Err(PosteriorError::DataOutsideSupport {
                        family: "GammaExponential",
                        value: bad,
                    });
                }
                let sum: f64 = values.iter().sum();
                Ok(BayesModel::GammaExponential {
                    prior: *prior,
                    posterior: (a + values.len() as f64, b + sum),
                    n_observed: n_observed + values.len(),
                })
            }
            BayesModel::DirichletCategorical {
                support,
                prior,
                posterior,
                n_observed,
            } => {
                let values = data.as_scalars().expect("dim checked");
                let mut alphas = posterior.clone();
                for &v in values {
                    match Self::support_index(support, v) {
                        Some(k) => alphas[k] += 1.0,
                        None => {
                            return Err(PosteriorError::DataOutsideSupport {
                                family: "DirichletCategorical",
                                value: v,
                            })
                        }
                    }
                }
                Ok(BayesModel::DirichletCategorical {
                    support: support.clone(),
                    prior: prior.clone(),
                    posterior: alphas,
                    n_observed: n_observed + values.len(),
                })
            }
            BayesModel::Product(parts) => {
                let updated = parts
                    .iter()
                    .enumerate()
                    .map(|(d, part)| {
                        part.update(&DataSet::from_scalars(data.column(d)))
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(BayesModel::Product(updated))
            }
        }
    }

    /// Draw a parameter from the posterior.
    pub fn sample_theta(&self, stream: &mut RandomStream) -> Theta {
        match self {
            BayesModel::GammaExponential {
                posterior: (a, b), ..
            } => Theta::Rate(sample_gamma(*a, *b, stream).expect("valid hyperparameters")),
            BayesModel::DirichletCategorical { posterior, .. } => {
                Theta::Probs(sample_dirichlet(posterior, stream).expect("valid hyperparameters"))
            }
            BayesModel::Product(parts) => {
                Theta::Product(parts.iter().map(|p| p.sample_theta(stream)).collect())
            }
        }
    }

    /// Draw one scenario from `f(·|θ)`.
    pub fn sample_scenario(&self, theta: &Theta, stream: &mut RandomStream) -> Vec<f64> {
        match (self, theta) {
            (BayesModel::GammaExponential { .. }, Theta::Rate(rate)) => {
                vec![sample_exponential(*rate, stream).expect("positive rate")]
            }
            (BayesModel::DirichletCategorical { support, .. }, Theta::Probs(probs)) => {
                let u = stream.uniform();
                let mut acc = 0.0;
                for (s, p) in support.iter().zip(probs) {
                    acc += p;
                    if u <= acc {
                        return vec![*s];
                    }
                }
                vec![*support.last().expect("non-empty support")]
            }
            (BayesModel::Product(parts), Theta::Product(draws)) => parts
                .iter()
                .zip(draws)
                .flat_map(|(p, t)| p.sample_scenario(t, stream))
                .collect(),
            _ => panic!("theta shape does not match model family"),
        }
    }

    /// Density (or probability mass) `f(ξ|θ)`.
    pub fn pdf(&self, theta: &Theta, xi: &[f64]) -> f64 {
        match (self, theta) {
            (BayesModel::GammaExponential { .. }, Theta::Rate(rate)) => {
                let x = xi[0];
                if x < 0.0 {
                    0.0
                } else {
                    rate * (-rate * x).exp()
                }
            }
            (BayesModel::DirichletCategorical { support, .. }, Theta::Probs(probs)) => {
                match Self::support_index(support, xi[0]) {
                    Some(k) => probs[k],
                    None => 0.0,
                }
            }
            (BayesModel::Product(parts), Theta::Product(draws)) => parts
                .iter()
                .zip(draws)
                .zip(xi)
                .map(|((p, t), &x)| p.pdf(t, &[x]))
                .product(),
            _ => panic!("theta shape does not match model family"),
        }
    }

    /// Sample `n_theta` posterior parameters with `n_xi` conditional scenarios
    /// each. Deterministic given the stream.
    pub fn build_scenarios(
        &self,
        n_theta: usize,
        n_xi: usize,
        stream: &mut RandomStream,
    ) -> Result<ScenarioMatrix, PosteriorError> {
        if n_theta == 0 || n_xi == 0 {
            return Err(PosteriorError::EmptyScenarioRequest);
        }
        let dim = self.dimension();
        let mut thetas = Vec::with_capacity(n_theta);
        let mut values = Vec::with_capacity(n_theta * n_xi * dim);
        for _ in 0..n_theta {
            let theta = self.sample_theta(stream);
            for _ in 0..n_xi {
                values.extend(self.sample_scenario(&theta, stream));
            }
            thetas.push(theta);
        }
        Ok(ScenarioMatrix {
            thetas,
            n_theta,
            n_xi,
            dim,
            values,
            epsilons: None,
        })
    }

    /// Compact config string: `gamma-exponential:a,b`,
    /// `dirichlet:support=...;alpha=...`, or `product(part|part|...)`.
    pub fn to_config_string(&self) -> String {
        fn join(v: &[f64]) -> String {
            v.iter()
                .map(|x| format!("{x}"))
                .collect::<Vec<_>>()
                .join(",")
        }
        match self {
            BayesModel::GammaExponential {
                posterior: (a, b), ..
            } => format!("gamma-exponential:{a},{b}"),
            BayesModel::DirichletCategorical {
                support, posterior, ..
            } => format!("dirichlet:support={};alpha={}", join(support), join(posterior)),
            BayesModel::Product(parts) => format!(
                "product({})",
                parts
                    .iter()
                    .map(BayesModel::to_config_string)
                    .collect::<Vec<_>>()
                    .join("|")
            ),
        }
    }

    /// Parse the config string format emitted by [`Self::to_config_string`].
    pub fn from_config_string(s: &str) -> Result<Self, PosteriorError> {
        let s = s.trim();
        let bad = |msg: &str| PosteriorError::InvalidConfig(format!("{msg}: `{s}`"));
        let parse_list = |body: &str| -> Result<Vec<f64>, PosteriorError> {
            body.split(',')
                .map(|t| t.trim().parse::<f64>().map_err(|_| bad("bad number")))
                .collect()
        };
        if let Some(body) = s.strip_prefix("gamma-exponential:") {
            let v = parse_list(body)?;
            if v.len() != 2 {
                return Err(bad("expected two gamma hyperparameters"));
            }
            return Self::gamma_exponential(v[0], v[1]);
        }
        if let Some(body) = s.strip_prefix("dirichlet:") {
            let mut support = None;
            let mut alpha = None;
            for field in body.split(';') {
                if let Some(v) = field.strip_prefix("support=") {
                    support = Some(parse_list(v)?);
                } else if let Some(v) = field.strip_prefix("alpha=") {
                    alpha = Some(parse_list(v)?);
                } else {
                    return Err(bad("unknown dirichlet field"));
                }
            }
            let support = support.ok_or_else(|| bad("missing support"))?;
            let alpha = match alpha {
                Some(a) => a,
                None => vec![1.0; support.len()],
            };
            return Self::dirichlet_categorical(support, alpha);
        }
        if let Some(body) = s.strip_prefix("product(").and_then(|b| b.strip_suffix(')')) {
            let parts = body
                .split('|')
                .map(Self::from_config_string)
                .collect::<Result<Vec<_>, _>>()?;
            return Self::product(parts);
        }
        Err(bad("unknown model family"))
    }
}

/// Posterior parameter draws with their conditional scenario rows: the sample
/// average substrate every solver shares.
#[derive(Debug, Clone)]
pub struct ScenarioMatrix {
    thetas: Vec<Theta>,
    n_theta: usize,
    n_xi: usize,
    dim: usize,
    values: Vec<f64>,
    epsilons: Option<Vec<f64>>,
}

impl ScenarioMatrix {
    pub fn n_theta(&self) -> usize {
        self.n_theta
    }

    pub fn n_xi(&self) -> usize {
        self.n_xi
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn thetas(&self) -> &[Theta] {
        &self.thetas
    }

    pub fn theta(&self, i: usize) -> &Theta {
        &self.thetas[i]
    }

    /// Scenario `j` drawn under `θ_i`.
    pub fn scenario(&self, i: usize, j: usize) -> &[f64] {
        let start = (i * self.n_xi + j) * self.dim;
        &self.values[start..start + self.dim]
    }

    /// Attach one ambiguity radius per θ row.
    pub fn set_epsilons(&mut self, epsilons: Vec<f64>) {
        assert_eq!(epsilons.len(), self.n_theta, "one radius per theta row");
        assert!(epsilons.iter().all(|&e| e >= 0.0), "radii must be >= 0");
        self.epsilons = Some(epsilons);
    }

    pub fn epsilons(&self) -> Option<&[f64]> {
        self.epsilons.as_deref()
    }

    /// Hash of the scenario values; two solves that share a seed must agree.
    pub fn digest(&self) -> u64 {
        fnv1a(
            (self.n_theta as u64) << 32 | self.n_xi as u64,
            &self.values,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gamma_update_is_conjugate_arithmetic() {
        let model = BayesModel::gamma_exponential(1.0, 1.0).unwrap();
        let post = model
            .update(&DataSet::from_scalars(vec![2.0, 3.0]))
            .unwrap();
        match post {
            BayesModel::GammaExponential {
                posterior,
                n_observed,
                ..
            } => {
                assert_eq!(posterior, (3.0, 6.0));
                assert_eq!(n_observed, 2);
            }
            _ => unreachable!(),
        }
    }

    #[test]
    fn dirichlet_update_counts_atoms() {
        let model = BayesModel::uniform_dirichlet(vec![1.0, 2.0, 3.0]).unwrap();
        let post = model
            .update(&DataSet::from_scalars(vec![1.0, 1.0, 3.0]))
            .unwrap();
        match post {
            BayesModel::DirichletCategorical { posterior, .. } => {
                assert_eq!(posterior, vec![3.0, 1.0, 2.0]);
            }
            _ => unreachable!(),
        }
    }

    #[test]
    fn update_rejects_out_of_support_data() {
        let model = BayesModel::default_exponential();
        let err = model
            .update(&DataSet::from_scalars(vec![2.0, -1.0]))
            .unwrap_err();
        assert!(matches!(
            err,
            PosteriorError::DataOutsideSupport { value, .. } if value == -1.0
        ));

        let model = BayesModel::uniform_dirichlet(vec![1.0, 2.0]).unwrap();
        assert!(model
            .update(&DataSet::from_scalars(vec![1.5]))
            .is_err());
    }

    #[test]
    fn update_composition_equals_single_update() {
        let model = BayesModel::default_exponential();
        let d1 = DataSet::from_scalars(vec![0.5, 4.0]);
        let d2 = DataSet::from_scalars(vec![1.25]);
        let joint = DataSet::from_scalars(vec![0.5, 4.0, 1.25]);
        let two_step = model.update(&d1).unwrap().update(&d2).unwrap();
        let one_step = model.update(&joint).unwrap();
        assert_eq!(two_step, one_step);
    }

    #[test]
    fn prior_only_model_has_posterior_equal_to_prior() {
        match BayesModel::gamma_exponential(2.0, 5.0).unwrap() {
            BayesModel::GammaExponential {
                prior, posterior, ..
            } => assert_eq!(prior, posterior),
            _ => unreachable!(),
        }
    }

    #[test]
    fn posterior_theta_means() {
        let model = BayesModel::gamma_exponential(3.0, 6.0).unwrap();
        let mut stream = RandomStream::new(7, 0);
        let n = 100_000;
        let mean = (0..n)
            .map(|_| model.sample_theta(&mut stream).as_rate().unwrap())
            .sum::<f64>()
            / n as f64;
        assert!((mean - 0.5).abs() < 0.01, "mean {mean}");

        let model =
            BayesModel::dirichlet_categorical(vec![1.0, 2.0, 3.0], vec![3.0, 1.0, 2.0]).unwrap();
        let mut acc = [0.0; 3];
        for _ in 0..n {
            let t = model.sample_theta(&mut stream);
            for (a, p) in acc.iter_mut().zip(t.as_probs().unwrap()) {
                *a += p;
            }
        }
        for (a, want) in acc.iter().zip([0.5, 1.0 / 6.0, 1.0 / 3.0]) {
            assert!((a / n as f64 - want).abs() < 0.01);
        }
    }

    #[test]
    fn posterior_concentrates_with_more_data() {
        let mut data_stream = RandomStream::new(3, 0);
        let draw_n = |n: usize, s: &mut RandomStream| {
            DataSet::from_scalars(
                (0..n)
                    .map(|_| sample_exponential(0.5, s).unwrap())
                    .collect(),
            )
        };
        let small = BayesModel::default_exponential()
            .update(&draw_n(10, &mut data_stream))
            .unwrap();
        let large = BayesModel::default_exponential()
            .update(&draw_n(1000, &mut data_stream))
            .unwrap();

        let posterior_sd = |model: &BayesModel| {
            let mut s = RandomStream::new(11, 0);
            let draws: Vec<f64> = (0..20_000)
                .map(|_| model.sample_theta(&mut s).as_rate().unwrap())
                .collect();
            let m = draws.iter().sum::<f64>() / draws.len() as f64;
            (draws.iter().map(|x| (x - m).powi(2)).sum::<f64>() / draws.len() as f64).sqrt()
        };
        assert!(posterior_sd(&large) < posterior_sd(&small) / 3.0);
    }

    #[test]
    fn scenario_matrix_shape_and_determinism() {
        let model = BayesModel::default_exponential();
        let tiny = model
            .build_scenarios(1, 1, &mut RandomStream::new(5, 0))
            .unwrap();
        assert_eq!((tiny.n_theta(), tiny.n_xi(), tiny.dim()), (1, 1, 1));

        let a = model
            .build_scenarios(100, 100, &mut RandomStream::new(5, 2))
            .unwrap();
        let b = model
            .build_scenarios(100, 100, &mut RandomStream::new(5, 2))
            .unwrap();
        assert_eq!(a.digest(), b.digest());

        assert!(model.build_scenarios(0, 5, &mut RandomStream::new(5, 0)).is_err());
    }

    #[test]
    fn pdf_examples() {
        let model = BayesModel::default_exponential();
        assert_eq!(model.pdf(&Theta::Rate(1.0), &[0.0]), 1.0);
        let v = model.pdf(&Theta::Rate(2.0), &[1.0]);
        assert!((v - 2.0 * (-2.0f64).exp()).abs() < 1e-12);
        assert!((v - 0.27067).abs() < 1e-5);
        assert_eq!(model.pdf(&Theta::Rate(2.0), &[-0.5]), 0.0);

        let cat = BayesModel::uniform_dirichlet(vec![1.0, 2.0]).unwrap();
        assert_eq!(cat.pdf(&Theta::Probs(vec![0.2, 0.8]), &[2.0]), 0.8);
    }

    #[test]
    fn product_model_updates_per_column() {
        let model = BayesModel::product(vec![
            BayesModel::default_exponential(),
            BayesModel::default_exponential(),
        ])
        .unwrap();
        let data =
            DataSet::from_rows(&[vec![1.0, 10.0], vec![3.0, 30.0]]).unwrap();
        let post = model.update(&data).unwrap();
        match post {
            BayesModel::Product(parts) => {
                match (&parts[0], &parts[1]) {
                    (
                        BayesModel::GammaExponential { posterior: p0, .. },
                        BayesModel::GammaExponential { posterior: p1, .. },
                    ) => {
                        assert_eq!(*p0, (3.0, 5.0));
                        assert_eq!(*p1, (3.0, 41.0));
                    }
                    _ => unreachable!(),
                }
            }
            _ => unreachable!(),
        }
    }

    #[test]
    fn config_round_trip() {
        let cases = [
            BayesModel::gamma_exponential(1.0, 1.0).unwrap(),
            BayesModel::dirichlet_categorical(vec![1.0, 2.0, 3.0], vec![2.0, 1.0, 1.0]).unwrap(),
            BayesModel::product(vec![
                BayesModel::default_exponential(),
                BayesModel::gamma_exponential(2.0, 3.0).unwrap(),
            ])
            .unwrap(),
        ];
        for model in cases {
            let s = model.to_config_string();
            let parsed = BayesModel::from_config_string(&s).unwrap();
            assert_eq!(parsed.to_config_string(), s);
        }
        assert!(BayesModel::from_config_string("normal:0,1").is_err());
        assert!(BayesModel::from_config_string("gamma-exponential:1").is_err());
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn conjugacy_composes_exactly(
                data in proptest::collection::vec(0.01f64..50.0, 2..20),
                split in 1usize..10,
            ) {
                let split = split.min(data.len() - 1);
                let model = BayesModel::default_exponential();
                let joint = model.update(&DataSet::from_scalars(data.clone())).unwrap();
                let stepped = model
                    .update(&DataSet::from_scalars(data[..split].to_vec())).unwrap()
                    .update(&DataSet::from_scalars(data[split..].to_vec())).unwrap();
                prop_assert_eq!(joint, stepped);
            }

            #[test]
            fn dirichlet_posterior_sum_is_prior_sum_plus_n(
                picks in proptest::collection::vec(0usize..3, 1..30),
            ) {
                let support = vec![1.0, 2.0, 3.0];
                let data: Vec<f64> = picks.iter().map(|&k| support[k]).collect();
                let n = data.len() as f64;
                let model = BayesModel::uniform_dirichlet(support).unwrap();
                let post = model.update(&DataSet::from_scalars(data)).unwrap();
                match post {
                    BayesModel::DirichletCategorical { posterior, .. } => {
                        let sum: f64 = posterior.iter().sum();
                        prop_assert!((sum - (3.0 + n)).abs() < 1e-9);
                    }
                    _ => prop_assert!(false),
                }
            }
        }
    }
}
