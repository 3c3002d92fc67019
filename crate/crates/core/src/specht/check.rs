//! Coxeter relations of the generator matrices.

use std::fmt;

use crate::error::Result;

use super::action::generator_matrix;
use super::basis::SpechtBasis;
use super::matrix::{BasisTag, TransitionMatrix};

/// Outcome of [`check_representation`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepresentationReport {
    pub n: usize,
    pub dim: usize,
    pub generators: usize,
    pub relations_checked: usize,
    /// The first relation that failed, if any.
    pub violation: Option<String>,
}

impl RepresentationReport {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

impl fmt::Display for RepresentationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.violation {
            None => write!(
                f,
                "n={}: {} relations hold for {} generators on a {}-dimensional module",
                self.n, self.relations_checked, self.generators, self.dim
            ),
            Some(v) => write!(f, "n={}: {v} fails", self.n),
        }
    }
}

/// Checks `s_i² = 1`, `s_i s_j = s_j s_i` for `|i - j| ≥ 2` and
/// `s_i s_{i+1} s_i = s_{i+1} s_i s_{i+1}` on the M basis.
pub fn check_representation(n: usize) -> Result<RepresentationReport> {
    let basis = SpechtBasis::new(n)?;
    let k = (3 * n).saturating_sub(1);
    let gens = (1..=k).map(|i| generator_matrix(&basis, i)).collect::<Result<Vec<_>>>()?;
    let id = TransitionMatrix::identity(BasisTag::M, basis.order().to_vec());
    let mut report = RepresentationReport { n, dim: basis.dim(), generators: k, relations_checked: 0, violation: None };
    let g = |i: usize| &gens[i - 1];
    for i in 1..=k {
        report.relations_checked += 1;
        if g(i).compose(g(i))? != id {
            report.violation = Some(format!("s{i}^2 = 1"));
            return Ok(report);
        }
    }
    for i in 1..=k {
        for j in i + 2..=k {
            report.relations_checked += 1;
            if g(i).compose(g(j))? != g(j).compose(g(i))? {
                report.violation = Some(format!("s{i} s{j} = s{j} s{i}"));
                return Ok(report);
            }
        }
    }
    for i in 1..k {
        report.relations_checked += 1;
        let lhs = g(i).compose(g(i + 1))?.compose(g(i))?;
        let rhs = g(i + 1).compose(g(i))?.compose(g(i + 1))?;
        if lhs != rhs {
            report.violation = Some(format!("s{i} s{} s{i} = s{} s{i} s{}", i + 1, i + 1, i + 1));
            return Ok(report);
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        let r = check_representation(1).unwrap();
        assert!(r.passed() && r.dim == 1 && r.relations_checked == 3);
        let r = check_representation(2).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(r.dim, 5);
    }
}
