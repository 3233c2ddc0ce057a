//! JSON encodings of groups, cyclotomic numbers, cochains and reports.

use std::collections::BTreeMap;
use std::path::Path;

use anomalab_core::azumaya::{AlgebraAction, Automorphism, Matrix, MatrixAlgebra};
use anomalab_core::cohomology::{Cochain, CohomologyGroup};
use anomalab_core::group::catalog;
use anomalab_core::twisted_double::{LabelEquivalence, ModularData};
use anomalab_core::{CycloLevel, CycloNumber, FiniteGroup, MuElement};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::CliError;

/// A group by catalog name, multiplication table or permutation generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupJson {
    Name(String),
    Table {
        order: usize,
        mult: Vec<Vec<usize>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        name: Option<String>,
    },
    Permutations {
        degree: usize,
        generators: Vec<Vec<usize>>,
    },
}

impl GroupJson {
    /// Catalog groups are written by name, anything else as a table.
    pub fn of(g: &FiniteGroup) -> GroupJson {
        if let Some(name) = g.name() {
            if catalog::named(name).is_ok_and(|c| c.table() == g.table()) {
                return GroupJson::Name(name.to_string());
            }
        }
        GroupJson::Table { order: g.order(), mult: g.table(), name: g.name().map(str::to_string) }
    }

    pub fn resolve(&self, max_order: usize) -> Result<FiniteGroup, CliError> {
        Ok(match self {
            GroupJson::Name(n) => catalog::named(n)?,
            GroupJson::Table { order, mult, name } => {
                if mult.len() != *order {
                    return Err(CliError::Input(format!("table has {} rows, order says {order}", mult.len())));
                }
                FiniteGroup::from_table(mult, name.clone())?
            }
            GroupJson::Permutations { degree, generators } => FiniteGroup::from_generators(*degree, generators, max_order)?,
        })
    }
}

/// A `--group` argument: a catalog name, or a path to a group JSON file.
pub fn parse_group(arg: &str, max_order: usize) -> Result<FiniteGroup, CliError> {
    if arg.ends_with(".json") || Path::new(arg).is_file() {
        let g: GroupJson = read_json(Path::new(arg))?;
        g.resolve(max_order)
    } else {
        Ok(catalog::named(arg)?)
    }
}

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

/// `{"level": N, "coeffs": [["num","den"], ...]}` on the power basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycloJson {
    pub level: u64,
    pub coeffs: Vec<[String; 2]>,
}

impl CycloJson {
    pub fn of(x: &CycloNumber) -> CycloJson {
        let x = x.reduce_level();
        CycloJson {
            level: x.level(),
            coeffs: x.coefficients().iter().map(|q| [q.numer().to_string(), q.denom().to_string()]).collect(),
        }
    }

    pub fn to_number(&self, max_phi: usize) -> Result<CycloNumber, CliError> {
        let level = CycloLevel::checked(self.level, max_phi)?;
        let parse = |s: &str| s.parse::<BigInt>().map_err(|_| CliError::Input(format!("bad integer {s:?}")));
        let coeffs = self
            .coeffs
            .iter()
            .map(|[n, d]| Ok((parse(n)?, parse(d)?)))
            .collect::<Result<Vec<_>, CliError>>()?;
        Ok(CycloNumber::from_fractions(&level, &coeffs)?)
    }
}

fn mu_json(x: &MuElement) -> [u64; 2] {
    [x.numerator(), x.denominator()]
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CochainJson {
    pub group: GroupJson,
    pub degree: usize,
    pub modulus: u64,
    pub table: Vec<u64>,
}

impl CochainJson {
    pub fn of(c: &Cochain) -> CochainJson {
        CochainJson { group: GroupJson::of(c.group()), degree: c.degree(), modulus: c.modulus(), table: c.table().to_vec() }
    }

    pub fn to_cochain(&self, max_order: usize) -> Result<Cochain, CliError> {
        let g = self.group.resolve(max_order)?;
        Ok(Cochain::new(&g, self.degree, self.modulus, self.table.clone())?)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CohomologyReport {
    pub group: GroupJson,
    pub degree: usize,
    pub modulus: u64,
    pub invariant_factors: Vec<u64>,
    pub order: u64,
    pub mu_factors: Vec<u64>,
    pub mu_order: u64,
    pub basis: Vec<Vec<u64>>,
    pub mu_basis: Vec<Vec<u64>>,
}

impl CohomologyReport {
    pub fn of(h: &CohomologyGroup) -> CohomologyReport {
        CohomologyReport {
            group: GroupJson::of(h.group()),
            degree: h.degree(),
            modulus: h.modulus(),
            invariant_factors: h.invariant_factors().to_vec(),
            order: h.order(),
            mu_factors: h.mu_factors().to_vec(),
            mu_order: h.mu_order(),
            basis: h.basis().iter().map(|c| c.table().to_vec()).collect(),
            mu_basis: h.mu_basis().iter().map(|c| c.table().to_vec()).collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct LabelJson {
    pub class_rep: usize,
    pub class_size: usize,
    pub dimension: u64,
    pub quantum_dimension: u64,
    /// `T` as a fraction `[num, den]` of a full turn.
    pub twist: [u64; 2],
    /// Projective character on the centralizer, element by element.
    pub centralizer: Vec<usize>,
    pub character: Vec<CycloJson>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ModularDataJson {
    pub group: GroupJson,
    pub alpha: Vec<u64>,
    pub modulus: u64,
    pub labels: Vec<LabelJson>,
    #[serde(rename = "S")]
    pub s: Vec<Vec<CycloJson>>,
    #[serde(rename = "T")]
    pub t: Vec<CycloJson>,
    pub level: u64,
    pub seed: u64,
}

impl ModularDataJson {
    pub fn of(g: &FiniteGroup, alpha: &[u64], modulus: u64, md: &ModularData) -> ModularDataJson {
        let labels = md
            .labels
            .iter()
            .map(|l| LabelJson {
                class_rep: l.class_rep,
                class_size: l.class_size,
                dimension: l.dimension,
                quantum_dimension: l.quantum_dimension(),
                twist: mu_json(&l.twist),
                centralizer: l.centralizer.elements().to_vec(),
                character: (0..l.character.len()).map(|i| CycloJson::of(&l.character_value(i))).collect(),
            })
            .collect();
        ModularDataJson {
            group: GroupJson::of(g),
            alpha: alpha.to_vec(),
            modulus,
            labels,
            s: md.s.iter().map(|row| row.iter().map(CycloJson::of).collect()).collect(),
            t: md.t.iter().map(CycloJson::of).collect(),
            level: md.level,
            seed: md.seed,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct EquivalenceJson {
    pub permutation: Vec<usize>,
    pub signs: Vec<i8>,
}

impl EquivalenceJson {
    pub fn of(e: &LabelEquivalence) -> EquivalenceJson {
        EquivalenceJson { permutation: e.permutation.clone(), signs: e.signs.clone() }
    }
}

/// A square matrix as rows of cyclotomic numbers.
pub type MatrixJson = Vec<Vec<CycloJson>>;

pub fn matrix_json(m: &Matrix) -> MatrixJson {
    m.rows().iter().map(|r| r.iter().map(CycloJson::of).collect()).collect()
}

fn matrix_from_json(m: &MatrixJson, level: &std::sync::Arc<CycloLevel>, max_phi: usize) -> Result<Matrix, CliError> {
    let rows = m
        .iter()
        .map(|r| r.iter().map(|x| Ok(x.to_number(max_phi)?.lift(level)?)).collect::<Result<Vec<_>, CliError>>())
        .collect::<Result<Vec<_>, CliError>>()?;
    Ok(Matrix::from_rows(rows)?)
}

/// `{"n", "level", "group", "auto": {"g": [images of E_ij]}, "lift": {"g": matrix}}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ActionJson {
    pub n: usize,
    pub level: u64,
    pub group: GroupJson,
    pub auto: BTreeMap<String, Vec<MatrixJson>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lift: Option<BTreeMap<String, MatrixJson>>,
}

fn element_key(g: usize) -> String {
    g.to_string()
}

impl ActionJson {
    pub fn of(act: &AlgebraAction) -> ActionJson {
        let a = act.algebra();
        ActionJson {
            n: a.size(),
            level: a.level(),
            group: GroupJson::of(act.group()),
            auto: act
                .maps()
                .iter()
                .enumerate()
                .map(|(g, phi)| (element_key(g), phi.images().iter().map(matrix_json).collect()))
                .collect(),
            lift: act.lift().map(|l| l.iter().enumerate().map(|(g, m)| (element_key(g), matrix_json(m))).collect()),
        }
    }

    pub fn to_action(&self, max_order: usize, max_phi: usize) -> Result<AlgebraAction, CliError> {
        let algebra = MatrixAlgebra::new(self.n, self.level)?;
        let level = CycloLevel::checked(self.level, max_phi)?;
        let group = self.group.resolve(max_order)?;
        let lookup = |g: usize| -> Result<&Vec<MatrixJson>, CliError> {
            self.auto.get(&element_key(g)).ok_or_else(|| CliError::Input(format!("no automorphism for element {g}")))
        };
        let maps = (0..group.order())
            .map(|g| {
                let images = lookup(g)?
                    .iter()
                    .map(|m| matrix_from_json(m, &level, max_phi))
                    .collect::<Result<Vec<_>, CliError>>()?;
                Ok(Automorphism::new(&algebra, images)?)
            })
            .collect::<Result<Vec<_>, CliError>>()?;
        let lift = match &self.lift {
            None => None,
            Some(l) => Some(
                (0..group.order())
                    .map(|g| {
                        let m = l.get(&element_key(g)).ok_or_else(|| CliError::Input(format!("no lift for element {g}")))?;
                        matrix_from_json(m, &level, max_phi)
                    })
                    .collect::<Result<Vec<_>, CliError>>()?,
            ),
        };
        Ok(AlgebraAction::new(algebra, group, maps, lift)?)
    }
}

/// Deterministic pretty JSON with a trailing newline.
pub fn to_string<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}
