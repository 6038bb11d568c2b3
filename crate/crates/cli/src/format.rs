//! The algebra file format: JSON with rationals written as `"p/q"` strings.

use std::path::Path;

use hmodpi::grassmann::{grassmann, H2ModuleAlgebra};
use hmodpi::linalg::Matrix;
use hmodpi::module_algebra::dual_action_extension;
use hmodpi::rational::{format_q, parse_q};
use hmodpi::{
    dual, group_algebra, h2_of, tensor, Algebra, Error, GroupTable, HModuleAlgebra, HopfAlgebra,
    Result, WedderburnData, Q,
};
use num_traits::Zero;
use serde::{Deserialize, Serialize};

/// `[i, j, k, "c"]`: `b_i b_j` has coefficient `c` at `b_k`.
pub type Triple = (usize, usize, usize, String);
/// `[row, col, "c"]`.
pub type Entry = (usize, usize, String);

#[derive(Clone, Debug, Default, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct Metadata {
    #[serde(default)]
    pub name: String,
    #[serde(default)]
    pub description: String,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum HopfSpec {
    /// A named group (`C3`, `V4`, `S3`, `D4`, `Q8`, ..) or an explicit Cayley table.
    Group {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        name: Option<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        cayley: Option<Vec<Vec<usize>>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        identity: Option<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        labels: Option<Vec<String>>,
    },
    Dual {
        of: Box<HopfSpec>,
    },
    Tensor {
        left: Box<HopfSpec>,
        right: Box<HopfSpec>,
    },
    /// `H ⊗ (F C₂)*`.
    H2 {
        of: Box<HopfSpec>,
    },
    Raw {
        labels: Vec<String>,
        mult: Vec<Triple>,
        unit: Vec<String>,
        counit: Vec<String>,
        coproduct: Vec<Triple>,
        antipode: Vec<Entry>,
    },
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum ActionSpec {
    /// Every `h` acts as `ε(h)`.
    Counit,
    /// `A₀ ⊗ H*` with `H` acting on the dual factor; the algebra section gives `A₀`.
    DualExtension,
    /// One sparse matrix per Hopf basis element, keyed by label.
    Explicit { matrices: Vec<(String, Vec<Entry>)> },
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSpec {
    /// `Q`, `M<n>`, `UT<n>`, `N<n>` (strictly upper triangular), `QxQ`, `E<k>` (Grassmann), `Z<n>` (zero product).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub builtin: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mult: Option<Vec<Triple>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<Vec<String>>,
    #[serde(default = "counit_action")]
    pub action: ActionSpec,
}

fn counit_action() -> ActionSpec {
    ActionSpec::Counit
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct WedderburnSpec {
    pub components: Vec<Vec<Vec<String>>>,
    pub radical: Vec<Vec<String>>,
    pub nilpotency_index: usize,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    #[serde(default)]
    pub metadata: Metadata,
    pub hopf: HopfSpec,
    pub algebra: AlgebraSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wedderburn: Option<WedderburnSpec>,
}

/// A loaded file.
#[derive(Clone, Debug)]
pub struct Loaded {
    pub name: String,
    pub module: HModuleAlgebra,
    /// Present when the Hopf algebra is of the form `H ⊗ (F C₂)*`.
    pub graded: Option<H2ModuleAlgebra>,
    pub wedderburn: Option<WedderburnData>,
}

fn rational(s: &str, what: &str) -> Result<Q> {
    parse_q(s).map_err(|e| Error::malformed(what, e.to_string()))
}

fn vector(v: &[String], len: usize, what: &str) -> Result<Vec<Q>> {
    if v.len() != len {
        return Err(Error::DimensionMismatch {
            context: what.into(),
            expected: len,
            found: v.len(),
        });
    }
    v.iter().map(|s| rational(s, what)).collect()
}

fn sparse_matrix(entries: &[Entry], n: usize, what: &str) -> Result<Matrix> {
    let mut m = Matrix::zeros(n, n);
    for (r, c, x) in entries {
        if *r >= n || *c >= n {
            return Err(Error::malformed(what, format!("entry ({r}, {c}) outside {n} x {n}")));
        }
        m.set(*r, *c, rational(x, what)?);
    }
    Ok(m)
}

impl HopfSpec {
    pub fn build(&self) -> Result<HopfAlgebra> {
        match self {
            HopfSpec::Group {
                name,
                cayley,
                identity,
                labels,
            } => {
                let table = match (name, cayley) {
                    (Some(n), None) => GroupTable::builtin(n)?,
                    (None, Some(c)) => {
                        let labels = labels
                            .clone()
                            .unwrap_or_else(|| (0..c.len()).map(|i| format!("g{i}")).collect());
                        GroupTable::new(c.clone(), identity.unwrap_or(0), labels)?
                    }
                    _ => {
                        return Err(Error::malformed(
                            "hopf group",
                            "give exactly one of `name` and `cayley`",
                        ))
                    }
                };
                Ok(group_algebra(&table))
            }
            HopfSpec::Dual { of } => Ok(dual(&of.build()?)),
            HopfSpec::Tensor { left, right } => Ok(tensor(&left.build()?, &right.build()?)),
            HopfSpec::H2 { of } => Ok(h2_of(&of.build()?)),
            HopfSpec::Raw {
                labels,
                mult,
                unit,
                counit,
                coproduct,
                antipode,
            } => {
                let m = labels.len();
                let mut table = vec![vec![Q::zero(); m]; m * m];
                for (i, j, k, c) in mult {
                    if *i >= m || *j >= m || *k >= m {
                        return Err(Error::malformed("hopf mult", format!("index in ({i}, {j}, {k}) >= {m}")));
                    }
                    table[i * m + j][*k] = rational(c, "hopf mult")?;
                }
                let mut delta = vec![Vec::new(); m];
                for (i, j, k, c) in coproduct {
                    if *i >= m {
                        return Err(Error::malformed("hopf coproduct", format!("index {i} >= {m}")));
                    }
                    delta[*i].push((*j, *k, rational(c, "hopf coproduct")?));
                }
                HopfAlgebra::from_parts(
                    labels.clone(),
                    table,
                    vector(unit, m, "hopf unit")?,
                    delta,
                    vector(counit, m, "hopf counit")?,
                    sparse_matrix(antipode, m, "hopf antipode")?,
                )
            }
        }
    }

    /// The base `H` when this is `H ⊗ (F C₂)*`.
    fn h2_base(&self) -> Option<&HopfSpec> {
        match self {
            HopfSpec::H2 { of } => Some(of),
            _ => None,
        }
    }
}

pub fn builtin_algebra(name: &str) -> Result<Algebra> {
    let bad = || Error::InvalidInput(format!("unknown builtin algebra `{name}`"));
    let num = |s: &str| s.parse::<usize>().ok().filter(|&n| (1..=6).contains(&n));
    Ok(match name {
        "Q" => Algebra::rationals(),
        "QxQ" => Algebra::direct_product(&Algebra::rationals(), &Algebra::rationals()),
        _ if name.starts_with("UT") => Algebra::upper_triangular(num(&name[2..]).ok_or_else(bad)?),
        _ if name.starts_with('M') => Algebra::matrix(num(&name[1..]).ok_or_else(bad)?),
        _ if name.starts_with('N') => Algebra::strictly_upper_triangular(num(&name[1..]).ok_or_else(bad)?),
        _ if name.starts_with('Z') => Algebra::zero_product(num(&name[1..]).ok_or_else(bad)?),
        _ if name.starts_with('E') => {
            let k = name[1..].parse::<usize>().ok().filter(|&k| k <= 6).ok_or_else(bad)?;
            grassmann(k).algebra
        }
        _ => return Err(bad()),
    })
}

impl AlgebraSpec {
    fn build_algebra(&self) -> Result<Algebra> {
        match (&self.builtin, &self.labels, &self.mult) {
            (Some(name), None, None) => builtin_algebra(name),
            (None, Some(labels), Some(mult)) => {
                let n = labels.len();
                let entries = mult
                    .iter()
                    .map(|(i, j, k, c)| Ok((*i, *j, *k, rational(c, "algebra mult")?)))
                    .collect::<Result<Vec<_>>>()?;
                let unit = match &self.unit {
                    Some(u) => Some(vector(u, n, "algebra unit")?),
                    None => None,
                };
                let alg = Algebra::from_entries(labels.clone(), entries, unit)?;
                Ok(match alg.unit() {
                    Some(_) => alg,
                    None => {
                        let u = alg.find_unit();
                        alg.with_unit(u)
                    }
                })
            }
            _ => Err(Error::malformed(
                "algebra",
                "give either `builtin` or both `labels` and `mult`",
            )),
        }
    }
}

impl AlgebraFile {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("algebra file: {e}")))
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn load(&self) -> Result<Loaded> {
        let hopf = self.hopf.build()?;
        let alg = self.algebra.build_algebra()?;
        let module = match &self.algebra.action {
            ActionSpec::Counit => HModuleAlgebra::with_counit_action(hopf.clone(), alg),
            ActionSpec::DualExtension => dual_action_extension(&alg, &hopf),
            ActionSpec::Explicit { matrices } => {
                let n = alg.dim();
                let mut action = vec![None; hopf.dim()];
                for (label, entries) in matrices {
                    let i = hopf
                        .label_index(label)
                        .ok_or_else(|| Error::malformed("action", format!("no Hopf basis element `{label}`")))?;
                    action[i] = Some(sparse_matrix(entries, n, &format!("action of {label}"))?);
                }
                let action = action
                    .into_iter()
                    .enumerate()
                    .map(|(i, m)| {
                        m.ok_or_else(|| {
                            Error::malformed("action", format!("missing matrix for `{}`", hopf.labels()[i]))
                        })
                    })
                    .collect::<Result<Vec<_>>>()?;
                HModuleAlgebra::new(hopf.clone(), alg, action)?
            }
        };
        let graded = match self.hopf.h2_base() {
            Some(base) => Some(H2ModuleAlgebra::new(base.build()?, module.clone())?),
            None => None,
        };
        let wedderburn = match &self.wedderburn {
            Some(w) => {
                let n = module.dim();
                let components = w
                    .components
                    .iter()
                    .map(|c| c.iter().map(|v| vector(v, n, "wedderburn component")).collect())
                    .collect::<Result<Vec<_>>>()?;
                let radical = w
                    .radical
                    .iter()
                    .map(|v| vector(v, n, "wedderburn radical"))
                    .collect::<Result<Vec<_>>>()?;
                Some(WedderburnData {
                    components,
                    radical_basis: radical,
                    nilpotency_index: w.nilpotency_index,
                })
            }
            None => None,
        };
        Ok(Loaded {
            name: self.metadata.name.clone(),
            module,
            graded,
            wedderburn,
        })
    }
}

/// Writes a vector as `"p/q"` strings.
pub fn vector_strings(v: &[Q]) -> Vec<String> {
    v.iter().map(format_q).collect()
}
