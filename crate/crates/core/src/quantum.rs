//! States, projective measurements, reduced states and entropies.
//!
//! Entropies are in nats. Post-measurement states remember the weights of the
//! basis they are diagonal in, so their entropy never needs an eigensolver.

use crate::error::{Error, Result};
use crate::numerics::{self, accumulate_outer, ComplexMatrix, StateVector, C64, ONE, ZERO};

pub type PureState = StateVector;

/// Tolerance for Hermiticity, trace and orthonormality checks.
pub const STATE_TOL: f64 = 1e-10;
/// Most negative diagonal entry accepted in a density matrix.
pub const NEGATIVE_TOL: f64 = 1e-12;
/// Probabilities below this are treated as exactly zero.
pub const PROB_CLAMP: f64 = 1e-14;

/// Hermitian energy operator; either dense or a sum of identical local terms
/// `Σ_μ h_μ` over a register of equal-dimension sites.
#[derive(Debug, Clone, PartialEq)]
pub struct Hamiltonian {
    repr: HamiltonianRepr,
}

#[derive(Debug, Clone, PartialEq)]
enum HamiltonianRepr {
    Dense(ComplexMatrix),
    LocalSum { local: ComplexMatrix, sites: usize },
}

impl Hamiltonian {
    pub fn new(matrix: ComplexMatrix) -> Result<Self> {
        let deviation = matrix.hermiticity_deviation();
        if deviation > STATE_TOL {
            return Err(Error::NotHermitian { deviation });
        }
        Ok(Self {
            repr: HamiltonianRepr::Dense(matrix),
        })
    }

    /// `diag(0, gap)` in the `{|g>, |e>}` basis.
    pub fn qubit(gap: f64) -> Self {
        Self {
            repr: HamiltonianRepr::Dense(ComplexMatrix::diagonal(&[0.0, gap])),
        }
    }

    /// `H = Σ_μ h_μ` with `h` acting on each of `sites` subsystems.
    pub fn local_sum(h: &Hamiltonian, sites: usize) -> Result<Self> {
        let local = match &h.repr {
            HamiltonianRepr::Dense(m) => m.clone(),
            HamiltonianRepr::LocalSum { .. } => {
                return Err(Error::InvalidParameter(
                    "local term of a local-sum Hamiltonian must be dense".into(),
                ))
            }
        };
        if sites == 0 {
            return Err(Error::InvalidParameter("local sum needs at least one site".into()));
        }
        Ok(Self {
            repr: HamiltonianRepr::LocalSum { local, sites },
        })
    }

    pub fn dim(&self) -> usize {
        match &self.repr {
            HamiltonianRepr::Dense(m) => m.rows(),
            HamiltonianRepr::LocalSum { local, sites } => local.rows().pow(*sites as u32),
        }
    }

    pub fn local_term(&self) -> Option<&ComplexMatrix> {
        match &self.repr {
            HamiltonianRepr::Dense(_) => None,
            HamiltonianRepr::LocalSum { local, .. } => Some(local),
        }
    }

    /// Dense matrix; for local sums this materializes `Σ_μ I⊗..⊗h⊗..⊗I`.
    pub fn to_dense(&self) -> ComplexMatrix {
        match &self.repr {
            HamiltonianRepr::Dense(m) => m.clone(),
            HamiltonianRepr::LocalSum { local, sites } => {
                let d = local.rows();
                let id = ComplexMatrix::identity(d);
                let dim = self.dim();
                let mut total = ComplexMatrix::zeros(dim, dim);
                for mu in 0..*sites {
                    let factors: Vec<ComplexMatrix> = (0..*sites)
                        .map(|nu| if nu == mu { local.clone() } else { id.clone() })
                        .collect();
                    let term = numerics::kron_all(&factors).expect("sites >= 1");
                    total = total.add(&term).expect("equal shapes");
                }
                total
            }
        }
    }

    /// `<v|H|v>` for a (not necessarily normalized) vector.
    pub fn expectation_raw(&self, v: &[C64]) -> Result<f64> {
        if v.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: v.len(),
            });
        }
        let value = match &self.repr {
            HamiltonianRepr::Dense(m) => numerics::inner_product(v, &m.mat_vec(v)?)?,
            HamiltonianRepr::LocalSum { local, sites } => {
                let mut acc = ZERO;
                for mu in 0..*sites {
                    let hv = apply_local(local, mu, *sites, v);
                    acc += numerics::inner_product(v, &hv)?;
                }
                acc
            }
        };
        real_part(value)
    }

    pub fn expectation(&self, psi: &StateVector) -> Result<f64> {
        self.expectation_raw(psi.amplitudes())
    }
}

/// `h` applied to site `site` of a register of `sites` equal subsystems.
fn apply_local(local: &ComplexMatrix, site: usize, sites: usize, v: &[C64]) -> Vec<C64> {
    let d = local.rows();
    let stride = d.pow((sites - site - 1) as u32);
    let block = stride * d;
    let mut out = vec![ZERO; v.len()];
    for (idx, o) in out.iter_mut().enumerate() {
        let digit = (idx / stride) % d;
        let base = idx - digit * stride;
        let mut acc = ZERO;
        for b in 0..d {
            acc += local.get(digit, b) * v[base + b * stride];
        }
        *o = acc;
    }
    debug_assert_eq!(v.len() % block, 0);
    out
}

fn real_part(z: C64) -> Result<f64> {
    if z.im.abs() > STATE_TOL * z.re.abs().max(1.0) {
        return Err(Error::ComplexExpectation { residue: z.im.abs() });
    }
    Ok(z.re)
}

/// Normalized density operator.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    matrix: ComplexMatrix,
    /// Eigenvalues in the basis the state is known to be diagonal in.
    diagonal_weights: Option<Vec<f64>>,
}

impl DensityMatrix {
    pub fn from_matrix(matrix: ComplexMatrix) -> Result<Self> {
        let deviation = matrix.hermiticity_deviation();
        if deviation > STATE_TOL {
            return Err(Error::NotHermitian { deviation });
        }
        let trace = matrix.trace().re;
        if (trace - 1.0).abs() > STATE_TOL {
            return Err(Error::BadTrace { trace });
        }
        if let Some(&value) = matrix.real_diagonal().iter().find(|&&x| x < -NEGATIVE_TOL) {
            return Err(Error::NegativeDiagonal { value });
        }
        Ok(Self {
            matrix,
            diagonal_weights: None,
        })
    }

    pub fn from_pure(psi: &StateVector) -> Self {
        Self {
            matrix: psi.projector(),
            diagonal_weights: Some(vec![1.0]),
        }
    }

    /// Diagonal in the computational basis.
    pub fn from_diagonal(weights: &[f64]) -> Result<Self> {
        let dist = OutcomeDistribution::unlabeled(weights.to_vec())?;
        Ok(Self {
            matrix: ComplexMatrix::diagonal(dist.probabilities()),
            diagonal_weights: Some(dist.probabilities().to_vec()),
        })
    }

    pub fn maximally_mixed(dim: usize) -> Self {
        let w = vec![1.0 / dim as f64; dim];
        Self {
            matrix: ComplexMatrix::diagonal(&w),
            diagonal_weights: Some(w),
        }
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn diagonal_weights(&self) -> Option<&[f64]> {
        self.diagonal_weights.as_deref()
    }

    /// `½ Σ |λ_i(ρ - σ)|`.
    pub fn trace_distance(&self, other: &Self) -> Result<f64> {
        let diff = self.matrix.sub(&other.matrix)?;
        let ev = numerics::hermitian_eigenvalues(&diff)?;
        Ok(0.5 * ev.iter().map(|x| x.abs()).sum::<f64>())
    }
}

/// Borrowed view of either kind of state.
#[derive(Debug, Clone, Copy)]
pub enum State<'a> {
    Pure(&'a StateVector),
    Mixed(&'a DensityMatrix),
}

impl State<'_> {
    pub fn dim(&self) -> usize {
        match self {
            State::Pure(psi) => psi.dim(),
            State::Mixed(rho) => rho.dim(),
        }
    }
}

impl<'a> From<&'a StateVector> for State<'a> {
    fn from(psi: &'a StateVector) -> Self {
        State::Pure(psi)
    }
}

impl<'a> From<&'a DensityMatrix> for State<'a> {
    fn from(rho: &'a DensityMatrix) -> Self {
        State::Mixed(rho)
    }
}

pub const COMPLEMENT_LABEL: &str = "complement";

/// Complete projective measurement: orthonormal vectors plus, when they do
/// not span the space, the complement projector `Q = I - Σ|k><k|` reported as
/// one extra outcome.
#[derive(Debug, Clone, PartialEq)]
pub struct ProjectiveMeasurement {
    dim: usize,
    vectors: Vec<StateVector>,
    labels: Vec<String>,
}

impl ProjectiveMeasurement {
    pub fn new(vectors: Vec<StateVector>, labels: Vec<String>) -> Result<Self> {
        let first = vectors
            .first()
            .ok_or_else(|| Error::InvalidParameter("measurement needs at least one vector".into()))?;
        let dim = first.dim();
        if labels.len() != vectors.len() {
            return Err(Error::InvalidParameter(format!(
                "{} labels for {} vectors",
                labels.len(),
                vectors.len()
            )));
        }
        if let Some(v) = vectors.iter().find(|v| v.dim() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: v.dim(),
            });
        }
        if vectors.len() > dim {
            return Err(Error::NotOrthonormal {
                deviation: f64::INFINITY,
            });
        }
        let m = Self { dim, vectors, labels };
        let deviation = m.gram_deviation();
        if deviation > STATE_TOL {
            return Err(Error::NotOrthonormal { deviation });
        }
        Ok(m)
    }

    /// Labels default to the vector index.
    pub fn from_vectors(vectors: Vec<StateVector>) -> Result<Self> {
        let labels = (0..vectors.len()).map(|k| k.to_string()).collect();
        Self::new(vectors, labels)
    }

    pub fn computational(dim: usize) -> Self {
        let vectors = (0..dim).map(|k| StateVector::basis(dim, k)).collect();
        let labels = (0..dim).map(|k| k.to_string()).collect();
        Self { dim, vectors, labels }
    }

    /// Product of local measurements, first factor most significant.
    /// Local complements are not supported.
    pub fn product(locals: &[ProjectiveMeasurement]) -> Result<Self> {
        let (first, rest) = locals
            .split_first()
            .ok_or_else(|| Error::InvalidParameter("empty product measurement".into()))?;
        if locals.iter().any(|m| m.has_complement()) {
            return Err(Error::InvalidParameter(
                "product of measurements with complements".into(),
            ));
        }
        let mut vectors = first.vectors.clone();
        let mut labels = first.labels.clone();
        for m in rest {
            let mut nv = Vec::with_capacity(vectors.len() * m.vectors.len());
            let mut nl = Vec::with_capacity(nv.capacity());
            for (v, l) in vectors.iter().zip(&labels) {
                for (w, lw) in m.vectors.iter().zip(&m.labels) {
                    nv.push(v.kron(w));
                    nl.push(format!("{l},{lw}"));
                }
            }
            vectors = nv;
            labels = nl;
        }
        Self::new(vectors, labels)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vectors(&self) -> &[StateVector] {
        &self.vectors
    }

    pub fn has_complement(&self) -> bool {
        self.vectors.len() < self.dim
    }

    pub fn outcome_count(&self) -> usize {
        self.vectors.len() + usize::from(self.has_complement())
    }

    pub fn outcome_labels(&self) -> Vec<String> {
        let mut labels = self.labels.clone();
        if self.has_complement() {
            labels.push(COMPLEMENT_LABEL.to_string());
        }
        labels
    }

    /// `Q v = v - Σ_k <k|v> |k>`.
    pub fn project_complement(&self, v: &[C64]) -> Vec<C64> {
        let mut out = v.to_vec();
        for k in &self.vectors {
            let a: C64 = k.amplitudes().iter().zip(v).map(|(x, y)| x.conj() * y).sum();
            for (o, x) in out.iter_mut().zip(k.amplitudes()) {
                *o -= a * x;
            }
        }
        out
    }

    /// Dense `Q`, or `None` when the vectors are complete.
    pub fn complement_projector(&self) -> Option<ComplexMatrix> {
        if !self.has_complement() {
            return None;
        }
        let mut q = ComplexMatrix::identity(self.dim);
        for k in &self.vectors {
            accumulate_outer(&mut q, k.amplitudes(), -1.0);
        }
        Some(q)
    }

    /// Max entrywise deviation of the Gram matrix from identity.
    pub fn gram_deviation(&self) -> f64 {
        let mut dev: f64 = 0.0;
        for (i, a) in self.vectors.iter().enumerate() {
            for (j, b) in self.vectors.iter().enumerate().skip(i) {
                let g = numerics::inner_product(a.amplitudes(), b.amplitudes())
                    .expect("equal dims checked at construction");
                let target = if i == j { ONE } else { ZERO };
                dev = dev.max((g - target).norm());
            }
        }
        dev
    }

    /// Max entrywise deviation of `Σ|k><k| + Q` from identity, with `Q`
    /// checked to be a projector. Materializes dense matrices.
    pub fn completeness_deviation(&self) -> f64 {
        let mut sum = ComplexMatrix::zeros(self.dim, self.dim);
        for k in &self.vectors {
            accumulate_outer(&mut sum, k.amplitudes(), 1.0);
        }
        let mut dev: f64 = 0.0;
        if let Some(q) = self.complement_projector() {
            let q2 = q.matmul(&q).expect("square");
            dev = dev.max(q2.max_abs_diff(&q).expect("same shape"));
            dev = dev.max(q.hermiticity_deviation());
            sum = sum.add(&q).expect("same shape");
        }
        dev.max(
            sum.max_abs_diff(&ComplexMatrix::identity(self.dim))
                .expect("same shape"),
        )
    }
}

/// Outcome probabilities `p_k`.
#[derive(Debug, Clone, PartialEq)]
pub struct OutcomeDistribution {
    probabilities: Vec<f64>,
    labels: Vec<String>,
}

impl OutcomeDistribution {
    pub fn new(probabilities: Vec<f64>, labels: Vec<String>) -> Result<Self> {
        if probabilities.len() != labels.len() {
            return Err(Error::InvalidDistribution(format!(
                "{} probabilities for {} labels",
                probabilities.len(),
                labels.len()
            )));
        }
        if probabilities.is_empty() {
            return Err(Error::InvalidDistribution("empty".into()));
        }
        let mut probabilities = probabilities;
        for p in &mut probabilities {
            if !p.is_finite() || *p < -NEGATIVE_TOL {
                return Err(Error::InvalidDistribution(format!("entry {p}")));
            }
            if *p < PROB_CLAMP {
                *p = 0.0;
            }
        }
        let sum: f64 = probabilities.iter().sum();
        if (sum - 1.0).abs() > STATE_TOL {
            return Err(Error::InvalidDistribution(format!("sums to {sum}")));
        }
        Ok(Self { probabilities, labels })
    }

    pub fn unlabeled(probabilities: Vec<f64>) -> Result<Self> {
        let labels = (0..probabilities.len()).map(|k| k.to_string()).collect();
        Self::new(probabilities, labels)
    }

    pub fn probabilities(&self) -> &[f64] {
        &self.probabilities
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.probabilities.len()
    }

    pub fn is_empty(&self) -> bool {
        self.probabilities.is_empty()
    }

    pub fn probability_of(&self, label: &str) -> Option<f64> {
        self.labels
            .iter()
            .position(|l| l == label)
            .map(|k| self.probabilities[k])
    }
}

/// Non-selective projective measurement.
///
/// Returns the outcome distribution and `ρ_f = Σ_k p_k |k><k| + QρQ`.
pub fn measure<'a>(
    state: impl Into<State<'a>>,
    m: &ProjectiveMeasurement,
) -> Result<(OutcomeDistribution, DensityMatrix)> {
    let state = state.into();
    if state.dim() != m.dim() {
        return Err(Error::DimensionMismatch {
            expected: m.dim(),
            found: state.dim(),
        });
    }
    let dim = m.dim();
    let mut rho_f = ComplexMatrix::zeros(dim, dim);
    let mut probs = Vec::with_capacity(m.outcome_count());
    match state {
        State::Pure(psi) => {
            for k in m.vectors() {
                let a = k.inner(psi)?;
                let p = a.norm_sqr();
                probs.push(p);
                accumulate_outer(&mut rho_f, k.amplitudes(), p);
            }
            if m.has_complement() {
                let phi = m.project_complement(psi.amplitudes());
                probs.push(numerics::norm_sqr(&phi));
                accumulate_outer(&mut rho_f, &phi, 1.0);
            }
        }
        State::Mixed(rho) => {
            let mat = rho.matrix();
            let mut rho_k = Vec::with_capacity(m.vectors().len());
            for k in m.vectors() {
                let u = mat.mat_vec(k.amplitudes())?;
                let p = real_part(numerics::inner_product(k.amplitudes(), &u)?)?;
                probs.push(p.max(0.0));
                accumulate_outer(&mut rho_f, k.amplitudes(), p);
                rho_k.push(u);
            }
            if m.has_complement() {
                let p_sum: f64 = probs.iter().sum();
                probs.push((1.0 - p_sum).max(0.0));
                let q_rho_q = complement_sandwich(mat, m, &rho_k)?;
                rho_f = rho_f.add(&q_rho_q)?;
            }
        }
    }
    let dist = OutcomeDistribution::new(probs, m.outcome_labels())?;
    let known = match state {
        State::Pure(_) => true,
        State::Mixed(_) => !m.has_complement() || *dist.probabilities().last().unwrap() == 0.0,
    };
    let post = DensityMatrix {
        matrix: rho_f,
        diagonal_weights: known.then(|| dist.probabilities().to_vec()),
    };
    Ok((dist, post))
}

/// `QρQ = ρ - Pρ - ρP + PρP` with `P = Σ|k><k|`, given `u_k = ρ|k>`.
fn complement_sandwich(rho: &ComplexMatrix, m: &ProjectiveMeasurement, rho_k: &[Vec<C64>]) -> Result<ComplexMatrix> {
    let dim = m.dim();
    let mut out = rho.clone();
    let vecs = m.vectors();
    for (k, u) in vecs.iter().zip(rho_k) {
        let kv = k.amplitudes();
        for i in 0..dim {
            for j in 0..dim {
                // (|k><k|ρ)_ij = k_i conj(u_j), (ρ|k><k|)_ij = u_i conj(k_j)
                *out.get_mut(i, j) -= kv[i] * u[j].conj() + u[i] * kv[j].conj();
            }
        }
    }
    for ka in vecs {
        for (kb, rho_kb) in vecs.iter().zip(rho_k) {
            let rab = numerics::inner_product(ka.amplitudes(), rho_kb)?;
            if rab == ZERO {
                continue;
            }
            let (x, y) = (ka.amplitudes(), kb.amplitudes());
            for (i, &xi) in x.iter().enumerate() {
                if xi == ZERO {
                    continue;
                }
                for (j, yj) in y.iter().enumerate() {
                    *out.get_mut(i, j) += rab * xi * yj.conj();
                }
            }
        }
    }
    Ok(out)
}

/// Partial trace over every subsystem except `keep`.
pub fn reduced_state(rho: &DensityMatrix, keep: usize, local_dims: &[usize]) -> Result<DensityMatrix> {
    let dim = rho.dim();
    if local_dims.iter().product::<usize>() != dim || local_dims.contains(&0) {
        return Err(Error::Factorization {
            local_dims: local_dims.to_vec(),
            dim,
        });
    }
    if keep >= local_dims.len() {
        return Err(Error::SubsystemIndex {
            index: keep,
            count: local_dims.len(),
        });
    }
    let d = local_dims[keep];
    let stride: usize = local_dims[keep + 1..].iter().product();
    let rest = dim / d;
    let m = rho.matrix();
    let mut out = ComplexMatrix::zeros(d, d);
    for r in 0..rest {
        let high = r / stride;
        let low = r % stride;
        let base = high * d * stride + low;
        for a in 0..d {
            for b in 0..d {
                *out.get_mut(a, b) += m.get(base + a * stride, base + b * stride);
            }
        }
    }
    Ok(DensityMatrix {
        matrix: out,
        diagonal_weights: None,
    })
}

/// `-Σ p ln p` in nats over clamped entries.
pub fn shannon_entropy_of(probabilities: &[f64]) -> f64 {
    probabilities
        .iter()
        .filter(|&&p| p >= PROB_CLAMP)
        .map(|&p| -p * p.ln())
        .sum()
}

pub fn shannon_entropy(dist: &OutcomeDistribution) -> f64 {
    shannon_entropy_of(dist.probabilities())
}

/// Entropy of a state diagonal in a known basis: the tagged weights if
/// present, otherwise the computational diagonal when the off-diagonal part
/// vanishes within tolerance.
pub fn entropy_of_diagonal_state(rho: &DensityMatrix) -> Result<f64> {
    if let Some(w) = rho.diagonal_weights() {
        return Ok(shannon_entropy_of(w));
    }
    let off_diagonal = rho.matrix().off_diagonal_norm();
    if off_diagonal > STATE_TOL {
        return Err(Error::NotDiagonal { off_diagonal });
    }
    Ok(shannon_entropy_of(&rho.matrix().real_diagonal()))
}

/// `-Tr ρ ln ρ` from a full eigendecomposition. Not needed for states this
/// crate constructs; useful as a cross-check.
pub fn von_neumann_entropy(rho: &DensityMatrix) -> Result<f64> {
    let ev = numerics::hermitian_eigenvalues(rho.matrix())?;
    Ok(shannon_entropy_of(&ev))
}

/// `Tr[h ρ]` or `<ψ|h|ψ>`.
pub fn mean_energy<'a>(state: impl Into<State<'a>>, h: &Hamiltonian) -> Result<f64> {
    let state = state.into();
    if state.dim() != h.dim() {
        return Err(Error::DimensionMismatch {
            expected: h.dim(),
            found: state.dim(),
        });
    }
    match state {
        State::Pure(psi) => h.expectation(psi),
        State::Mixed(rho) => match &h.repr {
            HamiltonianRepr::Dense(hm) => {
                let rm = rho.matrix();
                let dim = rm.rows();
                let mut acc = ZERO;
                for i in 0..dim {
                    for j in 0..dim {
                        acc += hm.get(i, j) * rm.get(j, i);
                    }
                }
                real_part(acc)
            }
            HamiltonianRepr::LocalSum { local, sites } => {
                let dims = vec![local.rows(); *sites];
                let local_h = Hamiltonian::new(local.clone())?;
                let mut total = 0.0;
                for mu in 0..*sites {
                    total += mean_energy(&reduced_state(rho, mu, &dims)?, &local_h)?;
                }
                Ok(total)
            }
        },
    }
}

/// Diagonal shortcut when available, eigendecomposition otherwise.
pub fn state_entropy(rho: &DensityMatrix) -> Result<f64> {
    match entropy_of_diagonal_state(rho) {
        Err(Error::NotDiagonal { .. }) => von_neumann_entropy(rho),
        other => other,
    }
}

/// `I = Σ_μ S(ρ_μ) - S(ρ)`.
pub fn multipartite_mutual_information(rho: &DensityMatrix, local_dims: &[usize]) -> Result<f64> {
    let global = state_entropy(rho)?;
    let mut local = 0.0;
    for mu in 0..local_dims.len() {
        local += state_entropy(&reduced_state(rho, mu, local_dims)?)?;
    }
    Ok(local - global)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::LN_2;

    fn plus() -> StateVector {
        StateVector::from_real(&[0.5_f64.sqrt(), 0.5_f64.sqrt()]).unwrap()
    }

    fn bell_pair_basis() -> ProjectiveMeasurement {
        let s = 0.5_f64.sqrt();
        ProjectiveMeasurement::from_vectors(vec![
            StateVector::basis(4, 0),
            StateVector::basis(4, 3),
            StateVector::from_real(&[0.0, s, s, 0.0]).unwrap(),
            StateVector::from_real(&[0.0, s, -s, 0.0]).unwrap(),
        ])
        .unwrap()
    }

    fn generic_h() -> Hamiltonian {
        Hamiltonian::new(
            ComplexMatrix::new(
                2,
                2,
                vec![
                    C64::new(0.3, 0.0),
                    C64::new(-0.4, 0.25),
                    C64::new(-0.4, -0.25),
                    C64::new(1.1, 0.0),
                ],
            )
            .unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn measure_plus_in_z() {
        let (dist, rho) = measure(&plus(), &ProjectiveMeasurement::computational(2)).unwrap();
        assert_eq!(dist.probabilities().len(), 2);
        for p in dist.probabilities() {
            assert!((p - 0.5).abs() < 1e-15);
        }
        let target = DensityMatrix::maximally_mixed(2);
        assert!(rho.matrix().max_abs_diff(target.matrix()).unwrap() < 1e-15);
    }

    #[test]
    fn measure_eigenstate() {
        let (dist, rho) = measure(&StateVector::basis(2, 0), &ProjectiveMeasurement::computational(2)).unwrap();
        assert_eq!(dist.probabilities(), &[1.0, 0.0]);
        assert_eq!(rho.matrix(), &StateVector::basis(2, 0).projector());
    }

    #[test]
    fn two_qubit_basis_at_half() {
        // Direct amplitudes of |ψ>⊗|ψ> at q = p = 1/2 are all 1/2.
        let psi = plus().kron(&plus());
        let (dist, _) = measure(&psi, &bell_pair_basis()).unwrap();
        let expected = [0.25, 0.25, 0.5, 0.0];
        for (p, e) in dist.probabilities().iter().zip(expected) {
            assert!((p - e).abs() < 1e-15, "{p} vs {e}");
        }
        assert_eq!(dist.probabilities()[3], 0.0);
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        let err = measure(&plus(), &bell_pair_basis()).unwrap_err();
        assert_eq!(err, Error::DimensionMismatch { expected: 4, found: 2 });
        assert!(mean_energy(&plus(), &Hamiltonian::qubit(1.0)).is_ok());
        assert!(mean_energy(&StateVector::basis(4, 0), &Hamiltonian::qubit(1.0)).is_err());
    }

    #[test]
    fn reduced_states() {
        let rho = DensityMatrix::from_pure(&StateVector::basis(4, 0));
        let r = reduced_state(&rho, 0, &[2, 2]).unwrap();
        assert_eq!(r.matrix(), &StateVector::basis(2, 0).projector());

        let r = reduced_state(&DensityMatrix::maximally_mixed(4), 0, &[2, 2]).unwrap();
        assert!(
            r.matrix()
                .max_abs_diff(DensityMatrix::maximally_mixed(2).matrix())
                .unwrap()
                < 1e-15
        );

        // |01>: site 0 holds |0>, site 1 holds |1>.
        let rho = DensityMatrix::from_pure(&StateVector::basis(4, 1));
        let r1 = reduced_state(&rho, 1, &[2, 2]).unwrap();
        assert_eq!(r1.matrix().get(1, 1), ONE);

        assert!(matches!(
            reduced_state(&rho, 0, &[2, 3]),
            Err(Error::Factorization { .. })
        ));
        assert!(matches!(
            reduced_state(&rho, 2, &[2, 2]),
            Err(Error::SubsystemIndex { .. })
        ));
    }

    #[test]
    fn shannon_examples() {
        let d = OutcomeDistribution::unlabeled(vec![0.5, 0.5]).unwrap();
        assert!((shannon_entropy(&d) - LN_2).abs() < 1e-15);
        let d = OutcomeDistribution::unlabeled(vec![1.0, 0.0, 0.0]).unwrap();
        assert_eq!(shannon_entropy(&d), 0.0);
        // 1/4, 1/2, 1/4: ¼ln4 + ½ln2 + ¼ln4 = 1.5 ln 2
        let d = OutcomeDistribution::unlabeled(vec![0.25, 0.5, 0.25]).unwrap();
        assert!((shannon_entropy(&d) - 1.5 * LN_2).abs() < 1e-15);
    }

    #[test]
    fn distribution_validation() {
        assert!(OutcomeDistribution::unlabeled(vec![0.6, 0.6]).is_err());
        assert!(OutcomeDistribution::unlabeled(vec![1.0 + 1e-11, -1e-11]).is_err());
        let d = OutcomeDistribution::unlabeled(vec![1.0, 1e-15]).unwrap();
        assert_eq!(d.probabilities()[1], 0.0);
        assert!(OutcomeDistribution::new(vec![1.0], vec![]).is_err());
    }

    #[test]
    fn diagonal_entropies() {
        let s = entropy_of_diagonal_state(&DensityMatrix::maximally_mixed(2)).unwrap();
        assert!((s - LN_2).abs() < 1e-15);
        let q: f64 = 0.2;
        let p = 1.0 - q;
        let rho = DensityMatrix::from_matrix(ComplexMatrix::diagonal(&[q, p])).unwrap();
        let s = entropy_of_diagonal_state(&rho).unwrap();
        assert!((s - (-q * q.ln() - p * p.ln())).abs() < 1e-15);
        let pure = DensityMatrix::from_pure(&plus());
        assert_eq!(entropy_of_diagonal_state(&pure).unwrap(), 0.0);

        // Same pure state without its tag is not diagonal in the stored basis.
        let untagged = DensityMatrix::from_matrix(plus().projector()).unwrap();
        assert!(matches!(
            entropy_of_diagonal_state(&untagged),
            Err(Error::NotDiagonal { .. })
        ));
        assert!(von_neumann_entropy(&untagged).unwrap().abs() < 1e-12);
    }

    #[test]
    fn energies() {
        let eps = 1.7;
        let h = Hamiltonian::qubit(eps);
        let one = DensityMatrix::from_pure(&StateVector::basis(2, 1));
        assert!((mean_energy(&one, &h).unwrap() - eps).abs() < 1e-15);

        let h = generic_h();
        let hm = h.to_dense();
        let (q, p): (f64, f64) = (0.35, 0.65);
        let rho_f = DensityMatrix::from_diagonal(&[q, p]).unwrap();
        let e = mean_energy(&rho_f, &h).unwrap();
        assert!((e - (q * hm.get(0, 0).re + p * hm.get(1, 1).re)).abs() < 1e-15);

        let psi = StateVector::from_real(&[q.sqrt(), p.sqrt()]).unwrap();
        let e = mean_energy(&psi, &h).unwrap();
        let closed = q * hm.get(0, 0).re + p * hm.get(1, 1).re + 2.0 * (q * p).sqrt() * hm.get(0, 1).re;
        assert!((e - closed).abs() < 1e-15);
    }

    #[test]
    fn local_sum_matches_dense() {
        let h = generic_h();
        let hn = Hamiltonian::local_sum(&h, 3).unwrap();
        let dense = Hamiltonian::new(hn.to_dense()).unwrap();
        let psi = StateVector::normalized(
            (0..8)
                .map(|k| C64::new(k as f64 * 0.3 - 1.0, (k * k) as f64 * 0.1))
                .collect(),
        )
        .unwrap();
        let a = mean_energy(&psi, &hn).unwrap();
        let b = mean_energy(&psi, &dense).unwrap();
        assert!((a - b).abs() < 1e-12);
        let rho = DensityMatrix::from_pure(&psi);
        assert!((mean_energy(&rho, &hn).unwrap() - b).abs() < 1e-12);
        assert!((mean_energy(&rho, &dense).unwrap() - b).abs() < 1e-12);
    }

    #[test]
    fn mutual_information_examples() {
        let r1 = DensityMatrix::from_diagonal(&[0.3, 0.7]).unwrap();
        let r2 = DensityMatrix::from_diagonal(&[0.6, 0.4]).unwrap();
        let prod = DensityMatrix::from_matrix(r1.matrix().kron(r2.matrix())).unwrap();
        let i = multipartite_mutual_information(&prod, &[2, 2]).unwrap();
        assert!(i.abs() < 1e-14);
    }

    #[test]
    fn complement_outcome_for_pure_and_mixed() {
        let s = 0.5_f64.sqrt();
        let m = ProjectiveMeasurement::from_vectors(vec![
            StateVector::basis(4, 0),
            StateVector::from_real(&[0.0, s, s, 0.0]).unwrap(),
        ])
        .unwrap();
        assert!(m.has_complement());
        assert!(m.completeness_deviation() < 1e-14);
        let psi = StateVector::from_real(&[0.5, 0.5, -0.5, 0.5]).unwrap();
        let (dist, rho_f) = measure(&psi, &m).unwrap();
        // |<00|ψ>|² = 1/4, sym overlap 0, rest 3/4
        assert_eq!(dist.labels().last().unwrap(), COMPLEMENT_LABEL);
        assert!((dist.probabilities()[0] - 0.25).abs() < 1e-15);
        assert!(dist.probabilities()[1].abs() < 1e-15);
        assert!((dist.probabilities()[2] - 0.75).abs() < 1e-15);

        let (dist2, rho_ff) = measure(&rho_f, &m).unwrap();
        for (a, b) in dist.probabilities().iter().zip(dist2.probabilities()) {
            assert!((a - b).abs() < 1e-12);
        }
        assert!(rho_ff.matrix().max_abs_diff(rho_f.matrix()).unwrap() < 1e-12);
    }

    #[test]
    fn rejects_non_orthonormal_vectors() {
        let err = ProjectiveMeasurement::from_vectors(vec![StateVector::basis(2, 0), plus()]).unwrap_err();
        assert!(matches!(err, Error::NotOrthonormal { .. }));
    }

    #[test]
    fn density_validation() {
        assert!(DensityMatrix::from_matrix(ComplexMatrix::diagonal(&[0.5, 0.6])).is_err());
        assert!(DensityMatrix::from_matrix(ComplexMatrix::diagonal(&[1.1, -0.1])).is_err());
        let nh = ComplexMatrix::from_real(2, 2, &[0.5, 0.1, 0.0, 0.5]).unwrap();
        assert!(DensityMatrix::from_matrix(nh).is_err());
    }
}
