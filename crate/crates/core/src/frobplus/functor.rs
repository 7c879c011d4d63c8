use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::tensor::{SymmetryChoice, TensorPowerAction};
use crate::error::{Error, Result};
use crate::exactalg::{matrix_to_strings, Field, Matrix, Quotient, Scalar, Vector};
use crate::limits::Limits;
use crate::rep::Representation;

/// `H^0(S, V^{⊗p}) ↪ V^{⊗p} ↠ H_0(S, V^{⊗p})` and its image.
#[derive(Clone, Debug)]
pub struct FrPlusResult {
    pub choice: SymmetryChoice,
    pub base: Representation,
    pub action: TensorPowerAction,
    /// Canonical basis of the invariants, as vectors in `V^{⊗p}`.
    pub invariants: Vec<Vector>,
    /// The coinvariants, as a complement plus projection.
    pub coinvariants: Quotient,
    /// Columns: a basis of the image, in coinvariant coordinates.
    pub image: Matrix,
    /// The induced action on the image.
    pub rep: Representation,
}

/// Dimensions of a computed `Fr₊`, for reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FrPlusSummary {
    pub field: String,
    pub p: usize,
    pub choice: SymmetryChoice,
    pub base_dim: usize,
    pub tensor_dim: usize,
    pub invariants_dim: usize,
    pub coinvariants_dim: usize,
    pub image_dim: usize,
}

pub fn fr_plus(v: &Representation, limits: &Limits) -> Result<FrPlusResult> {
    fr_plus_with(v, SymmetryChoice::Cyclic, limits)
}

pub fn fr_plus_with(v: &Representation, choice: SymmetryChoice, limits: &Limits) -> Result<FrPlusResult> {
    let field = v.field();
    let action = TensorPowerAction::new(field, v.dim(), limits)?;
    let n = action.tensor_dim();
    let id = Matrix::identity(field, n);
    let diffs: Vec<Matrix> = action.generators(choice).iter().map(|g| g - &id).collect();

    let stacked = diffs.iter().skip(1).fold(diffs[0].clone(), |acc, d| acc.vstack(d).expect("same width"));
    let invariants = stacked.kernel_basis();
    let span: Vec<Vector> = diffs.iter().flat_map(|d| (0..n).map(move |j| d.column(j))).collect();
    let coinvariants = Quotient::new(field, n, &span);

    let composite = &coinvariants.projection * &Matrix::from_columns(field, n, &invariants);
    let image = Matrix::from_columns(field, coinvariants.dim(), &composite.column_space_basis());

    let matrices = v
        .matrices()
        .iter()
        .map(|m| {
            let q = coinvariants.induced(&action.power_of(m));
            image
                .solve_matrix(&(&q * &image))
                .ok_or_else(|| Error::NotARepresentation("image is not stable under the group".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let rep = Representation::new(v.group().clone(), field, image.cols(), matrices)?;
    Ok(FrPlusResult { choice, base: v.clone(), action, invariants, coinvariants, image, rep })
}

impl FrPlusResult {
    pub fn field(&self) -> Field {
        self.base.field()
    }

    pub fn dim(&self) -> usize {
        self.image.cols()
    }

    pub fn summary(&self) -> FrPlusSummary {
        FrPlusSummary {
            field: self.field().to_string(),
            p: self.action.power(),
            choice: self.choice,
            base_dim: self.base.dim(),
            tensor_dim: self.action.tensor_dim(),
            invariants_dim: self.invariants.len(),
            coinvariants_dim: self.coinvariants.dim(),
            image_dim: self.dim(),
        }
    }

    /// Coordinates of `[v ⊗ .. ⊗ v]` in the image basis.
    pub fn t(&self, v: &[Scalar]) -> Vector {
        let x = self.coinvariants.projection.apply(&self.action.pure_power(v));
        self.image.solve(&x).expect("p-th powers are invariant")
    }

    /// Matrix of `t(V): V^{(p)} → Fr₊(V)` in the bases `e_i ⊗ 1` and the
    /// image basis.
    pub fn t_matrix(&self) -> Matrix {
        let field = self.field();
        let d = self.base.dim();
        let cols: Vec<Vector> = (0..d).map(|i| self.t(&crate::exactalg::unit_vector(field, d, i))).collect();
        Matrix::from_columns(field, self.dim(), &cols)
    }
}

/// Coordinates of `v` in `V^{(p)}`: the set-level identity `V → V^{(p)}` is
/// `p`-semilinear, so it applies Frobenius to each coordinate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TwistedSpace {
    pub field: Field,
    pub dim: usize,
}

impl TwistedSpace {
    pub fn of(v: &Representation) -> Self {
        TwistedSpace { field: v.field(), dim: v.dim() }
    }

    pub fn twist(&self, v: &[Scalar]) -> Result<Vector> {
        v.iter().map(Scalar::frobenius).collect()
    }

    /// `λv ↦ λ^p (v ⊗ 1)` on every basis vector and every scalar of a prime
    /// field sample.
    pub fn check_semilinear(&self, scalars: &[Scalar]) -> Result<bool> {
        for i in 0..self.dim {
            let e = crate::exactalg::unit_vector(self.field, self.dim, i);
            let te = self.twist(&e)?;
            for l in scalars {
                let lp = l.frobenius()?;
                let scaled: Vector = e.iter().map(|x| x * l).collect();
                let want: Vector = te.iter().map(|x| x * &lp).collect();
                if self.twist(&scaled)? != want {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// `Fr₊` of an arbitrary linear map `V → W`: `φ^{⊗p}` passed to the images.
pub fn fr_plus_linear(a: &FrPlusResult, b: &FrPlusResult, phi: &Matrix) -> Result<Matrix> {
    if a.choice != b.choice {
        return Err(Error::Shape("Fr₊ results built from different symmetry choices".into()));
    }
    if phi.rows() != b.base.dim() || phi.cols() != a.base.dim() {
        return Err(Error::Shape(format!(
            "map is {}x{}, expected {}x{}",
            phi.rows(),
            phi.cols(),
            b.base.dim(),
            a.base.dim()
        )));
    }
    let big = a.action.power_of(phi);
    let q = &(&b.coinvariants.projection * &big) * &a.coinvariants.section();
    b.image
        .solve_matrix(&(&q * &a.image))
        .ok_or_else(|| Error::Shape("φ^{⊗p} does not carry image into image".into()))
}

/// `Fr₊(φ)` for an intertwiner `φ: V → W`.
pub fn fr_plus_morphism(a: &FrPlusResult, b: &FrPlusResult, phi: &Matrix) -> Result<Matrix> {
    if phi.rows() != b.base.dim() || phi.cols() != a.base.dim() || !a.base.is_intertwiner(&b.base, phi) {
        return Err(Error::NotAnIntertwiner("Fr₊ is applied to a non-intertwiner".into()));
    }
    fr_plus_linear(a, b, phi)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TMapReport {
    pub p: usize,
    pub dim: usize,
    pub image_dim: usize,
    pub matrix: Vec<Vec<String>>,
    pub bijective: bool,
    /// `t(v) = T · v^{(p)}` on basis and sampled vectors.
    pub twisted_linear: bool,
    /// `t(λv) = λ^p t(v)`.
    pub semilinear: bool,
    /// `t(u + v) = t(u) + t(v)`.
    pub additive: bool,
    /// `Fr₊(ρ(g)) · T = T · ρ(g)^{(p)}` for every `g`.
    pub natural: bool,
    pub checked_vectors: usize,
    pub witness: Option<String>,
}

impl TMapReport {
    pub fn passed(&self) -> bool {
        self.bijective && self.twisted_linear && self.semilinear && self.additive && self.natural
    }
}

/// Evaluates `v ↦ [v ⊗ .. ⊗ v]` on the basis and on `samples` seeded random
/// vectors, scalars and pairs.
pub fn t_map(res: &FrPlusResult, samples: usize, seed: u64) -> Result<TMapReport> {
    let field = res.field();
    let d = res.base.dim();
    let twisted = TwistedSpace::of(&res.base);
    let t = res.t_matrix();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut witness = None;
    let mut vectors: Vec<Vector> = (0..d).map(|i| crate::exactalg::unit_vector(field, d, i)).collect();
    vectors.extend((0..samples).map(|_| (0..d).map(|_| Scalar::random(field, &mut rng)).collect()));

    let mut twisted_linear = true;
    for v in &vectors {
        if res.t(v) != t.apply(&twisted.twist(v)?) {
            twisted_linear = false;
            witness.get_or_insert_with(|| format!("t({}) is not T·v^(p)", show(v)));
        }
    }
    let mut semilinear = true;
    let mut additive = true;
    for k in 0..samples.max(1) {
        let u = &vectors[k % vectors.len()];
        let v = &vectors[(k * 7 + 1) % vectors.len()];
        let l = Scalar::random(field, &mut rng);
        let lu: Vector = u.iter().map(|x| x * &l).collect();
        let lp = l.frobenius()?;
        if res.t(&lu) != res.t(u).iter().map(|x| x * &lp).collect::<Vec<_>>() {
            semilinear = false;
            witness.get_or_insert_with(|| format!("t({l}·{}) != {l}^p t(v)", show(u)));
        }
        let sum: Vector = u.iter().zip(v).map(|(a, b)| a + b).collect();
        let want: Vector = res.t(u).iter().zip(res.t(v)).map(|(a, b)| a + &b).collect();
        if res.t(&sum) != want {
            additive = false;
            witness.get_or_insert_with(|| format!("t({} + {}) is not additive", show(u), show(v)));
        }
    }
    let natural = res
        .base
        .matrices()
        .iter()
        .zip(res.rep.matrices())
        .all(|(m, x)| m.frobenius().map(|f| x * &t == &t * &f).unwrap_or(false));
    if !natural {
        witness.get_or_insert_with(|| "t does not intertwine V^(p) and Fr₊(V)".into());
    }
    Ok(TMapReport {
        p: res.action.power(),
        dim: d,
        image_dim: res.dim(),
        matrix: matrix_to_strings(&t),
        bijective: t.is_invertible(),
        twisted_linear,
        semilinear,
        additive,
        natural,
        checked_vectors: vectors.len(),
        witness,
    })
}

fn show(v: &[Scalar]) -> String {
    format!("({})", v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", "))
}
