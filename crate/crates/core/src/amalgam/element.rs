use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::layout::Layout;
use crate::error::{Error, Result};
use crate::exactalg::{Field, Scalar, Vector};
use crate::groups::{normal_form, AmalgamPresentation, Factor, Letter, ReducedWord};
use crate::rep::AmalgamRep;

/// The grid of one index sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedComponent {
    pub sequence: Vec<Factor>,
    pub values: Vec<Scalar>,
}

/// An element of the completed tensor algebra cut off above degree `N`.
#[derive(Clone, Debug)]
pub struct TruncatedElement {
    layout: Arc<Layout>,
    field: Field,
    values: Vector,
}

impl PartialEq for TruncatedElement {
    fn eq(&self, o: &Self) -> bool {
        self.layout.same_shape(&o.layout) && self.field == o.field && self.values == o.values
    }
}

impl Eq for TruncatedElement {}

/// Raw word spelled by a sequence and a tuple.
pub fn letters_of(seq: &[Factor], tuple: &[usize]) -> Vec<Letter> {
    seq.iter().zip(tuple).map(|(&f, &g)| Letter::new(f, g)).collect()
}

impl TruncatedElement {
    pub fn new(layout: Arc<Layout>, field: Field, values: Vector) -> Result<Self> {
        if values.len() != layout.len() {
            return Err(Error::MissingComponent(format!(
                "{} coordinates given, layout has {}",
                values.len(),
                layout.len()
            )));
        }
        if let Some(x) = values.iter().find(|x| x.field() != field) {
            return Err(Error::FieldMismatch(format!("coordinate {x} is not in {field}")));
        }
        Ok(TruncatedElement { layout, field, values })
    }

    pub fn constant(layout: Arc<Layout>, lambda: &Scalar) -> Self {
        let values = vec![lambda.clone(); layout.len()];
        TruncatedElement { field: lambda.field(), layout, values }
    }

    /// The unit `(1, 1, 1, ...)`.
    pub fn unit(layout: Arc<Layout>, field: Field) -> Self {
        Self::constant(layout, &Scalar::one(field))
    }

    pub fn zero(layout: Arc<Layout>, field: Field) -> Self {
        Self::constant(layout, &Scalar::zero(field))
    }

    /// `f_s(t) = F(element spelled by (s, t))`; requires injective
    /// structure maps.
    pub fn from_word_function(
        layout: Arc<Layout>,
        field: Field,
        f: impl Fn(&ReducedWord) -> Scalar,
    ) -> Result<Self> {
        let p = layout.presentation().clone();
        let mut values = Vec::with_capacity(layout.len());
        for seq in layout.sequences() {
            for t in layout.tuples(&seq) {
                values.push(f(&normal_form(&p, &letters_of(&seq, &t))?));
            }
        }
        Self::new(layout, field, values)
    }

    pub fn layout(&self) -> &Arc<Layout> {
        &self.layout
    }

    pub fn presentation(&self) -> &Arc<AmalgamPresentation> {
        self.layout.presentation()
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn degree(&self) -> usize {
        self.layout.degree()
    }

    pub fn values(&self) -> &[Scalar] {
        &self.values
    }

    pub fn value(&self, seq: &[Factor], tuple: &[usize]) -> &Scalar {
        &self.values[self.layout.coord(seq, tuple)]
    }

    pub fn with_coordinate(&self, coord: usize, x: Scalar) -> Self {
        let mut out = self.clone();
        out.values[coord] = x;
        out
    }

    pub fn component(&self, seq: &[Factor]) -> GradedComponent {
        let idx = self.layout.sequence_index(seq);
        let off = self.layout.offset(idx);
        GradedComponent {
            sequence: seq.to_vec(),
            values: self.values[off..off + self.layout.grid_size(idx)].to_vec(),
        }
    }

    pub fn components(&self) -> Vec<GradedComponent> {
        self.layout.sequences().map(|s| self.component(&s)).collect()
    }

    fn check_compatible(&self, o: &TruncatedElement) -> Result<()> {
        if !self.layout.same_shape(&o.layout) {
            return Err(Error::Shape("elements of different layouts".into()));
        }
        if self.field != o.field {
            return Err(Error::FieldMismatch(format!("{} vs {}", self.field, o.field)));
        }
        Ok(())
    }

    /// Componentwise product.
    pub fn multiply(&self, o: &TruncatedElement) -> Result<TruncatedElement> {
        self.check_compatible(o)?;
        let values = self.values.iter().zip(&o.values).map(|(a, b)| a * b).collect();
        Ok(TruncatedElement { layout: self.layout.clone(), field: self.field, values })
    }

    pub fn add(&self, o: &TruncatedElement) -> Result<TruncatedElement> {
        self.check_compatible(o)?;
        let values = self.values.iter().zip(&o.values).map(|(a, b)| a + b).collect();
        Ok(TruncatedElement { layout: self.layout.clone(), field: self.field, values })
    }

    pub fn scale(&self, lambda: &Scalar) -> TruncatedElement {
        let values = self.values.iter().map(|a| a * lambda).collect();
        TruncatedElement { layout: self.layout.clone(), field: self.field, values }
    }

    /// `ε(f) = f_∅`.
    pub fn counit(&self) -> Scalar {
        self.values[0].clone()
    }

    /// `S(f)_{i1..in}(g1, .., gn) = f_{in..i1}(gn^{-1}, .., g1^{-1})`.
    pub fn antipode(&self) -> TruncatedElement {
        let p = self.presentation().clone();
        let mut values = Vec::with_capacity(self.values.len());
        for seq in self.layout.sequences() {
            let rev: Vec<Factor> = seq.iter().rev().copied().collect();
            for t in self.layout.tuples(&seq) {
                let inv: Vec<usize> =
                    seq.iter().zip(&t).rev().map(|(&f, &g)| p.factor(f).inv(g)).collect();
                values.push(self.value(&rev, &inv).clone());
            }
        }
        TruncatedElement { layout: self.layout.clone(), field: self.field, values }
    }

    /// Serializable form keyed by index sequence.
    pub fn to_document(&self) -> ElementDocument {
        ElementDocument {
            presentation: self.presentation().name().to_string(),
            field: self.field.to_string(),
            degree: self.degree(),
            components: self
                .components()
                .into_iter()
                .map(|c| ComponentDocument {
                    sequence: c.sequence.iter().map(|f| f.number()).collect(),
                    values: c.values.iter().map(|x| x.to_string()).collect(),
                })
                .collect(),
        }
    }

    pub fn from_document(layout: Arc<Layout>, doc: &ElementDocument) -> Result<Self> {
        let field = Field::parse(&doc.field)?;
        if doc.degree != layout.degree() {
            return Err(Error::Parse(format!("degree {} does not match layout {}", doc.degree, layout.degree())));
        }
        let mut values: Vec<Option<Scalar>> = vec![None; layout.len()];
        for c in &doc.components {
            let seq = c.sequence.iter().map(|&n| Factor::from_number(n)).collect::<Result<Vec<_>>>()?;
            if seq.len() > layout.degree() {
                return Err(Error::Parse(format!("sequence {:?} above the truncation degree", c.sequence)));
            }
            let idx = layout.sequence_index(&seq);
            if c.values.len() != layout.grid_size(idx) {
                return Err(Error::Parse(format!(
                    "sequence {:?} has {} values, expected {}",
                    c.sequence,
                    c.values.len(),
                    layout.grid_size(idx)
                )));
            }
            for (k, v) in c.values.iter().enumerate() {
                let x: Scalar = v.parse()?;
                if x.field() != field {
                    return Err(Error::FieldMismatch(format!("value {v} is not in {field}")));
                }
                values[layout.offset(idx) + k] = Some(x);
            }
        }
        let values = values
            .into_iter()
            .enumerate()
            .map(|(c, v)| {
                v.ok_or_else(|| {
                    let (s, _) = layout.decode(c);
                    Error::MissingComponent(format!(
                        "component {:?}",
                        s.iter().map(|f| f.number()).collect::<Vec<_>>()
                    ))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(layout, field, values)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ComponentDocument {
    pub sequence: Vec<u8>,
    pub values: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ElementDocument {
    pub presentation: String,
    pub field: String,
    pub degree: usize,
    pub components: Vec<ComponentDocument>,
}

/// `f_∅ = δ_ij` and `f_{i1..in}(g1..gn)` = entry `(i, j)` of
/// `ρ(g1)⋯ρ(gn)`. Indices are 0-based.
pub fn matrix_coefficient_element(rho: &AmalgamRep, i: usize, j: usize, layout: Arc<Layout>) -> Result<TruncatedElement> {
    let d = rho.dim();
    if i >= d || j >= d {
        return Err(Error::IndexOutOfRange(format!("entry ({i}, {j}) of a {d}-dimensional representation")));
    }
    if layout.presentation().name() != rho.presentation().name() {
        return Err(Error::Shape("representation and layout use different presentations".into()));
    }
    let field = rho.field();
    let mut values = Vec::with_capacity(layout.len());
    for seq in layout.sequences() {
        for t in layout.tuples(&seq) {
            // Row i of the product, built left to right.
            let mut row: Vector = (0..d).map(|c| Scalar::from_i64(field, (c == i) as i64)).collect();
            for (&f, &g) in seq.iter().zip(&t) {
                let m = rho.factor_rep(f).matrix(g);
                row = (0..d)
                    .map(|c| (0..d).fold(Scalar::zero(field), |acc, k| acc + &(&row[k] * m.get(k, c))))
                    .collect();
            }
            values.push(row[j].clone());
        }
    }
    TruncatedElement::new(layout, field, values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::{sl2_rep, v_a};

    #[test]
    fn antipode_is_involutive_on_matrix_coefficients() {
        let r = v_a(&Scalar::from_i64(Field::Rational, 2)).unwrap();
        let l = Arc::new(Layout::new(r.presentation().clone(), 3).unwrap());
        let f = matrix_coefficient_element(&r, 0, 1, l).unwrap();
        assert_eq!(f.antipode().antipode(), f);
        assert_eq!(f.counit(), Scalar::zero(Field::Rational));
    }

    #[test]
    fn document_roundtrip() {
        let r = sl2_rep();
        let l = Arc::new(Layout::new(r.presentation().clone(), 2).unwrap());
        let f = matrix_coefficient_element(&r, 1, 0, l.clone()).unwrap();
        let doc = f.to_document();
        let text = serde_json::to_string(&doc).unwrap();
        let back: ElementDocument = serde_json::from_str(&text).unwrap();
        assert_eq!(TruncatedElement::from_document(l.clone(), &back).unwrap(), f);
        let mut missing = back.clone();
        missing.components.pop();
        assert!(matches!(TruncatedElement::from_document(l, &missing), Err(Error::MissingComponent(_))));
    }

    #[test]
    fn out_of_range_entry() {
        let r = sl2_rep();
        let l = Arc::new(Layout::new(r.presentation().clone(), 1).unwrap());
        assert!(matches!(matrix_coefficient_element(&r, 2, 0, l), Err(Error::IndexOutOfRange(_))));
    }
}
