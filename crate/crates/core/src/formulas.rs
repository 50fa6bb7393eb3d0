//! Closed-form closeness and residual-closeness values for graph families,
//! each guarded by the parameter domain its derivation covers.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::generate::FamilySpec;
use crate::scalar::Scalar;

macro_rules! formula_ids {
    ($($id:ident),* $(,)?) => {
        #[allow(non_camel_case_types)]
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
        pub enum FormulaId { $($id),* }

        impl FormulaId {
            pub const ALL: &'static [FormulaId] = &[$(FormulaId::$id),*];

            pub fn name(self) -> &'static str {
                match self { $(FormulaId::$id => stringify!($id)),* }
            }
        }
    };
}

formula_ids!(
    C_Kn, C_Star, C_Path, C_Cycle, R_Kn, CL_Cycle, CL_Path, CL_Star, CL_Kn, CM_Path, CM_Cycle,
    CM_Star, CM_Kn, CM_Wheel, CM_Knm, RM_Path, RM_Cycle, RM_Star, RM_Wheel, RM_Knm,
);

impl fmt::Display for FormulaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FormulaId {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        FormulaId::ALL
            .iter()
            .copied()
            .find(|id| id.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown formula id {s:?}"))
    }
}

/// Graph operator applied to the base family before measuring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Operator {
    Identity,
    Middle,
    Line,
}

/// Which oracle quantity a formula predicts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Measure {
    Closeness,
    Residual,
}

#[derive(Debug, Clone, Serialize)]
pub struct FormulaInfo {
    pub id: FormulaId,
    pub arity: usize,
    pub validity: &'static str,
    pub formula: &'static str,
    pub citation: &'static str,
    pub operator: Operator,
    pub measure: Measure,
}

impl FormulaId {
    pub fn arity(self) -> usize {
        match self {
            FormulaId::CM_Knm | FormulaId::RM_Knm => 2,
            _ => 1,
        }
    }

    /// Smallest admissible value of every parameter.
    fn min_param(self) -> u64 {
        use FormulaId::*;
        match self {
            C_Kn | C_Star | C_Path | CL_Star => 1,
            R_Kn | CL_Path | CL_Kn | CM_Path | CM_Star | CM_Knm | RM_Path | RM_Star | RM_Knm => 2,
            C_Cycle | CL_Cycle | CM_Cycle | CM_Kn | RM_Cycle => 3,
            CM_Wheel => 5,
            RM_Wheel => 6,
        }
    }

    pub fn validity(self) -> &'static str {
        use FormulaId::*;
        match self {
            C_Kn | C_Star | C_Path | CL_Star => "n ≥ 1",
            R_Kn | CL_Path | CL_Kn | CM_Path | CM_Star | RM_Path | RM_Star => "n ≥ 2",
            C_Cycle | CL_Cycle | CM_Cycle | CM_Kn | RM_Cycle => "n ≥ 3",
            CM_Wheel => "n > 4",
            RM_Wheel => "n ≥ 6",
            CM_Knm | RM_Knm => "n, m > 1",
        }
    }

    pub fn formula(self) -> &'static str {
        use FormulaId::*;
        match self {
            C_Kn => "n(n-1)/2",
            C_Star => "n(n+3)/4",
            C_Path => "2n - 4 + 2^(2-n)",
            C_Cycle => "odd: 2n(1 - 2^(-(n-1)/2)); even: n(2 - 3/2^(n/2))",
            R_Kn => "(n-1)(n-2)/2",
            CL_Cycle => "C(C_n)",
            CL_Path => "C(P_{n-1}) = 2n - 6 + 2^(3-n)",
            CL_Star => "C(K_n) = n(n-1)/2",
            CL_Kn => "n(n^3 + 2n^2 - 13n + 10)/16",
            CM_Path => "7n - 16 + 18/2^n",
            CM_Cycle => {
                "even: 3/2 C(C_n) + 4n(1 - 2^(-n/2)); \
                 odd: 3/2 C(C_n) + 2n(2(1 - 2^(-(n-1)/2)) + 2^(-(n+1)/2))"
            }
            CM_Star => "(9n^2 + 11n)/8",
            CM_Kn => "n(n-1)(n^2 + 7n + 2)/16",
            CM_Wheel => "2n^2 + 6n",
            CM_Knm => "((m+n)(m+n-1) + mn(4 + 6(m+n) + 2mn))/8",
            RM_Path => "even: 2 C(M(P_{n/2})); odd: C(M(P_{(n-1)/2})) + C(M(P_{(n+1)/2}))",
            RM_Cycle => "7n - 16 + 18/2^n",
            RM_Star => "(9n^2 - 7n - 2)/8",
            RM_Wheel => "(16n^2 + 28n + 3)/8",
            RM_Knm => "((m+n)(m+n-11) + mn(6(m+n) + 2mn) + 5)/8",
        }
    }

    pub fn citation(self) -> &'static str {
        use FormulaId::*;
        match self {
            C_Kn => "closeness of the complete graph K_n",
            C_Star => "closeness of the star S_{1,n}",
            C_Path => "closeness of the path P_n",
            C_Cycle => "closeness of the cycle C_n",
            R_Kn => "vertex residual closeness of K_n",
            CL_Cycle => "closeness of the line graph L(C_n)",
            CL_Path => "closeness of the line graph L(P_n)",
            CL_Star => "closeness of the line graph L(S_{1,n})",
            CL_Kn => "closeness of the line graph L(K_n)",
            CM_Path => "closeness of the middle graph M(P_n)",
            CM_Cycle => "closeness of the middle graph M(C_n)",
            CM_Star => "closeness of the middle graph M(S_{1,n})",
            CM_Kn => "closeness of the middle graph M(K_n)",
            CM_Wheel => "closeness of the middle graph M(W_{1,n})",
            CM_Knm => "closeness of the middle graph M(K_{n,m})",
            RM_Path => "vertex residual closeness of M(P_n)",
            RM_Cycle => "vertex residual closeness of M(C_n)",
            RM_Star => "vertex residual closeness of M(S_{1,n})",
            RM_Wheel => "vertex residual closeness of M(W_{1,n})",
            RM_Knm => "vertex residual closeness of M(K_{n,m})",
        }
    }

    pub fn operator(self) -> Operator {
        let name = self.name();
        if name.starts_with("CM_") || name.starts_with("RM_") {
            Operator::Middle
        } else if name.starts_with("CL_") {
            Operator::Line
        } else {
            Operator::Identity
        }
    }

    pub fn measure(self) -> Measure {
        if self.name().starts_with('R') {
            Measure::Residual
        } else {
            Measure::Closeness
        }
    }

    /// Base graph whose (transformed) closeness the formula predicts.
    pub fn base_family(self, params: &[u64]) -> FamilySpec {
        use FormulaId::*;
        let n = params[0] as usize;
        match self {
            C_Kn | R_Kn | CL_Kn | CM_Kn => FamilySpec::Complete { n },
            C_Star | CL_Star | CM_Star | RM_Star => FamilySpec::Star { n },
            C_Path | CL_Path | CM_Path | RM_Path => FamilySpec::Path { n },
            C_Cycle | CL_Cycle | CM_Cycle | RM_Cycle => FamilySpec::Cycle { n },
            CM_Wheel | RM_Wheel => FamilySpec::Wheel { n },
            CM_Knm | RM_Knm => FamilySpec::CompleteBipartite {
                n,
                m: params[1] as usize,
            },
        }
    }

    pub fn in_domain(self, params: &[u64]) -> bool {
        params.len() == self.arity() && params.iter().all(|&p| p >= self.min_param())
    }

    pub fn check_domain(self, params: &[u64]) -> Result<()> {
        if self.in_domain(params) {
            Ok(())
        } else {
            Err(Error::OutOfValidityDomain {
                id: self.name().to_string(),
                params: params.to_vec(),
                validity: self.validity().to_string(),
            })
        }
    }

    pub fn info(self) -> FormulaInfo {
        FormulaInfo {
            id: self,
            arity: self.arity(),
            validity: self.validity(),
            formula: self.formula(),
            citation: self.citation(),
            operator: self.operator(),
            measure: self.measure(),
        }
    }
}

pub fn list_formulas() -> Vec<FormulaInfo> {
    FormulaId::ALL.iter().map(|id| id.info()).collect()
}

/// Evaluates `id` at `params`, rejecting parameters outside its domain.
pub fn eval_formula<T: Scalar>(id: FormulaId, params: &[u64]) -> Result<T> {
    id.check_domain(params)?;
    Ok(eval_unchecked(id, params))
}

pub fn eval_f64(id: FormulaId, params: &[u64]) -> Result<f64> {
    eval_formula(id, params)
}

fn int<T: Scalar>(v: i64) -> T {
    T::from_int(v)
}

/// `2^-e`.
fn half_pow<T: Scalar>(e: i64) -> T {
    T::pow2(-(e as i32))
}

fn cycle_closeness<T: Scalar>(n: i64) -> T {
    if n % 2 == 1 {
        int::<T>(2 * n) * (T::one() - half_pow((n - 1) / 2))
    } else {
        int::<T>(n) * (int::<T>(2) - int::<T>(3) * half_pow(n / 2))
    }
}

fn middle_path_closeness<T: Scalar>(n: i64) -> T {
    int::<T>(7 * n - 16) + int::<T>(18) * half_pow(n)
}

fn eval_unchecked<T: Scalar>(id: FormulaId, params: &[u64]) -> T {
    use FormulaId::*;
    let n = params[0] as i64;
    let m = params.get(1).copied().unwrap_or(0) as i64;
    match id {
        C_Kn | CL_Star => int::<T>(n * (n - 1)) / int(2),
        C_Star => int::<T>(n * (n + 3)) / int(4),
        C_Path => int::<T>(2 * n - 4) + T::pow2((2 - n) as i32),
        C_Cycle | CL_Cycle => cycle_closeness(n),
        R_Kn => int::<T>((n - 1) * (n - 2)) / int(2),
        CL_Path => int::<T>(2 * n - 6) + T::pow2((3 - n) as i32),
        CL_Kn => int::<T>(n * (n * n * n + 2 * n * n - 13 * n + 10)) / int(16),
        CM_Path | RM_Cycle => middle_path_closeness(n),
        CM_Cycle => {
            let base = int::<T>(3) / int(2) * cycle_closeness::<T>(n);
            let cross = if n % 2 == 0 {
                int::<T>(4 * n) * (T::one() - half_pow(n / 2))
            } else {
                int::<T>(2 * n)
                    * (int::<T>(2) * (T::one() - half_pow((n - 1) / 2)) + half_pow((n + 1) / 2))
            };
            base + cross
        }
        CM_Star => int::<T>(9 * n * n + 11 * n) / int(8),
        CM_Kn => int::<T>(n * (n - 1) * (n * n + 7 * n + 2)) / int(16),
        CM_Wheel => int(2 * n * n + 6 * n),
        CM_Knm => {
            let s = m + n;
            int::<T>(s * (s - 1) + m * n * (4 + 6 * s + 2 * m * n)) / int(8)
        }
        RM_Path => {
            if n % 2 == 0 {
                int::<T>(2) * middle_path_closeness(n / 2)
            } else {
                middle_path_closeness::<T>((n - 1) / 2) + middle_path_closeness((n + 1) / 2)
            }
        }
        RM_Star => int::<T>(9 * n * n - 7 * n - 2) / int(8),
        RM_Wheel => int::<T>(16 * n * n + 28 * n + 3) / int(8),
        RM_Knm => {
            let s = m + n;
            int::<T>(s * (s - 11) + m * n * (6 * s + 2 * m * n) + 5) / int(8)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Exact;
    use FormulaId::*;

    fn f(id: FormulaId, p: &[u64]) -> f64 {
        eval_f64(id, p).unwrap()
    }

    #[test]
    fn catalog_values() {
        assert_eq!(f(CM_Path, &[2]), 2.5);
        assert_eq!(f(CM_Star, &[2]), 7.25);
        assert_eq!(f(CM_Kn, &[3]), 12.0);
        assert_eq!(f(CM_Knm, &[2, 2]), 19.5);
        assert_eq!(f(RM_Path, &[4]), 5.0);
        assert_eq!(f(RM_Star, &[2]), 2.5);
        assert_eq!(f(CM_Wheel, &[5]), 80.0);
        assert_eq!(f(RM_Cycle, &[4]), 13.125);
        assert_eq!(f(C_Path, &[3]), 2.5);
        assert_eq!(f(C_Cycle, &[4]), 5.0);
        assert_eq!(f(C_Kn, &[4]), 6.0);
        assert_eq!(f(CL_Kn, &[4]), 4.0 * (64.0 + 32.0 - 52.0 + 10.0) / 16.0);
    }

    #[test]
    fn domain_rejections() {
        for (id, p) in [
            (CM_Wheel, vec![4]),
            (RM_Wheel, vec![5]),
            (CM_Kn, vec![2]),
            (CM_Knm, vec![1, 3]),
            (CM_Knm, vec![3]),
            (C_Cycle, vec![2]),
            (CM_Path, vec![1]),
        ] {
            assert!(
                matches!(eval_f64(id, &p), Err(Error::OutOfValidityDomain { .. })),
                "{id} {p:?}"
            );
        }
        assert!(eval_f64(CM_Wheel, &[5]).is_ok());
        assert!(eval_f64(RM_Wheel, &[6]).is_ok());
    }

    #[test]
    fn catalog_listing() {
        let cat = list_formulas();
        assert_eq!(cat.len(), 20);
        let find = |id| cat.iter().find(|e| e.id == id).unwrap();
        assert_eq!(find(CM_Wheel).validity, "n > 4");
        assert_eq!(find(RM_Wheel).validity, "n ≥ 6");
        assert_eq!(find(CM_Knm).arity, 2);
        assert_eq!("cm_path".parse::<FormulaId>(), Ok(CM_Path));
        assert!("CM_Nope".parse::<FormulaId>().is_err());
    }

    fn ex(id: FormulaId, p: &[u64]) -> Exact {
        eval_formula(id, p).unwrap()
    }

    #[test]
    fn internal_identities_exact() {
        let q = |a: i64, b: i64| Exact::new(a.into(), b.into());
        for n in 2..40u64 {
            // tree identity on stars and paths
            assert_eq!(ex(CM_Star, &[n]), q(5, 2) * ex(C_Star, &[n]) + ex(C_Kn, &[n]));
            assert_eq!(ex(CM_Path, &[n]), q(5, 2) * ex(C_Path, &[n]) + ex(CL_Path, &[n]));
            assert_eq!(
                ex(RM_Star, &[n]),
                ex(CM_Star, &[n]) - q(9 * n as i64 + 1, 4)
            );
        }
        for n in 3..40u64 {
            assert_eq!(ex(RM_Cycle, &[n]), ex(CM_Path, &[n]));
        }
        for n in 6..40u64 {
            assert_eq!(
                ex(RM_Wheel, &[n]),
                ex(CM_Wheel, &[n]) - q(20 * n as i64 - 3, 8)
            );
        }
        for n in 2..12u64 {
            for m in 2..12u64 {
                assert_eq!(ex(CM_Knm, &[n, m]), ex(CM_Knm, &[m, n]));
                assert_eq!(ex(RM_Knm, &[n, m]), ex(RM_Knm, &[m, n]));
            }
        }
    }

    #[test]
    fn boundary_coincidences() {
        assert_eq!(ex(CM_Kn, &[3]), ex(CM_Cycle, &[3]));
        assert_eq!(ex(CM_Knm, &[2, 2]), ex(CM_Cycle, &[4]));
        assert_eq!(ex(CM_Star, &[2]), ex(CM_Path, &[3]));
    }

    #[test]
    fn float_matches_exact() {
        for &id in FormulaId::ALL {
            for n in id.min_param()..id.min_param() + 25 {
                let p: Vec<u64> = vec![n; id.arity()];
                assert_eq!(f(id, &p), ex(id, &p).approx_f64(), "{id} {p:?}");
            }
        }
    }
}
