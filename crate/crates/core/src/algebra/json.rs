use serde::{Deserialize, Serialize};

use super::{AlgebraError, QAlgebra};
use crate::exact::{format_rational, parse_rational, Rational};

/// Wire form of a [`QAlgebra`]: rationals as `"p/q"` strings, constants
/// flattened row-major as `c[i][j][k]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraJson {
    pub dim: usize,
    pub unit: Vec<String>,
    pub constants: Vec<String>,
}

impl From<&QAlgebra> for AlgebraJson {
    fn from(a: &QAlgebra) -> Self {
        AlgebraJson {
            dim: a.dim(),
            unit: a.unit().iter().map(format_rational).collect(),
            constants: a.constants().iter().map(format_rational).collect(),
        }
    }
}

impl TryFrom<&AlgebraJson> for QAlgebra {
    type Error = AlgebraError;

    fn try_from(j: &AlgebraJson) -> Result<Self, AlgebraError> {
        let parse = |v: &[String]| -> Result<Vec<Rational>, AlgebraError> {
            v.iter()
                .map(|s| parse_rational(s).map_err(AlgebraError::from))
                .collect()
        };
        QAlgebra::new(j.dim, &parse(&j.constants)?, parse(&j.unit)?)
    }
}
