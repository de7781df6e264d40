//! Closed-loop path fixtures through the strata of the permutation
//! [563412]: two ten-segment loops whose endpoints chain cyclically while
//! staying inside one rank class and one signed cell.

use num::{BigRational, One};
use perm_core::Permutation;
use quat_clifford::SignedPermMatrix;
use serde::Deserialize;

use crate::cell::{bruhat_perm, signed_cell};
use crate::error::{Error, Result};
use crate::matrix::RationalLowerTriangular;

const FIXTURE_JSON: &str = include_str!("../fixtures/gamma_paths.json");

#[derive(Deserialize)]
struct FileFixture {
    permutation: Vec<u8>,
    families: Vec<FamilyFixture>,
}

#[derive(Deserialize)]
struct FamilyFixture {
    name: String,
    paths: Vec<PathFixture>,
}

#[derive(Deserialize)]
struct PathFixture {
    // rows[r][c] = [constant, slope]: the (r+1, c+1) entry is c0 + c1 t.
    rows: Vec<Vec<[i64; 2]>>,
}

/// One loop segment: a unit lower triangular matrix whose entries are
/// linear in the parameter t.
pub struct GammaPath {
    rows: Vec<Vec<[i64; 2]>>,
}

impl GammaPath {
    /// Evaluates the segment at a rational parameter.
    pub fn at(&self, t: &BigRational) -> RationalLowerTriangular {
        let rows = self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&[c0, c1]| {
                        BigRational::from_integer(c0.into())
                            + BigRational::from_integer(c1.into()) * t
                    })
                    .collect()
            })
            .collect();
        RationalLowerTriangular::from_rows(rows).expect("shape validated at load time")
    }
}

/// One closed loop, stored as consecutive segments over t in [-1, 1].
pub struct GammaFamily {
    name: String,
    paths: Vec<GammaPath>,
}

impl GammaFamily {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn paths(&self) -> &[GammaPath] {
        &self.paths
    }
}

/// The embedded loop data: the target permutation and its loop families.
pub struct GammaFixture {
    permutation: Permutation,
    families: Vec<GammaFamily>,
}

impl GammaFixture {
    pub fn permutation(&self) -> &Permutation {
        &self.permutation
    }

    pub fn families(&self) -> &[GammaFamily] {
        &self.families
    }
}

/// Parses and shape-validates the embedded fixture file.
pub fn gamma_fixture() -> Result<GammaFixture> {
    let file: FileFixture =
        serde_json::from_str(FIXTURE_JSON).map_err(|e| Error::Fixture(e.to_string()))?;
    let permutation = Permutation::from_oneline(file.permutation)
        .map_err(|e| Error::Fixture(format!("bad permutation: {e}")))?;
    let n_plus_1 = permutation.n_plus_1();
    let mut families = Vec::new();
    for family in file.families {
        if family.paths.is_empty() {
            return Err(Error::Fixture(format!("family {} has no paths", family.name)));
        }
        let mut paths = Vec::new();
        for (p, path) in family.paths.into_iter().enumerate() {
            if path.rows.len() != n_plus_1 {
                return Err(Error::Fixture(format!(
                    "family {}, path {}: expected {} rows, got {}",
                    family.name,
                    p + 1,
                    n_plus_1,
                    path.rows.len()
                )));
            }
            for (r, row) in path.rows.iter().enumerate() {
                if row.len() != r + 1 || row[r] != [1, 0] {
                    return Err(Error::Fixture(format!(
                        "family {}, path {}: row {} is not unit lower triangular",
                        family.name,
                        p + 1,
                        r + 1
                    )));
                }
            }
            paths.push(GammaPath { rows: path.rows });
        }
        families.push(GammaFamily { name: family.name, paths });
    }
    Ok(GammaFixture { permutation, families })
}

/// Verified summary of one family: every junction chains, every sampled
/// point has the expected rank-jump permutation, and a single signed cell
/// covers the whole loop.
pub struct GammaFamilyReport {
    pub name: String,
    pub paths: usize,
    pub cell: SignedPermMatrix,
}

pub struct GammaReport {
    pub permutation: Permutation,
    pub families: Vec<GammaFamilyReport>,
}

/// Runs the loop checks on the embedded fixtures: cyclic endpoint chaining
/// (segment i at t=1 equals segment i+1 at t=-1, wrapping around), the
/// rank-jump permutation at the sampled parameters -1, -1/2, 0, 1/2, 1, and
/// constancy of the signed cell over all samples of the family.
pub fn gamma_fixture_check() -> Result<GammaReport> {
    let fixture = gamma_fixture()?;
    let one = BigRational::one();
    let samples: Vec<BigRational> = [(-1i64, 1i64), (-1, 2), (0, 1), (1, 2), (1, 1)]
        .iter()
        .map(|&(n, d)| BigRational::new(n.into(), d.into()))
        .collect();
    let mut reports = Vec::new();
    for family in fixture.families() {
        let k = family.paths().len();
        for i in 0..k {
            let here = family.paths()[i].at(&one);
            let next = family.paths()[(i + 1) % k].at(&(-one.clone()));
            if here != next {
                return Err(Error::ChainBroken {
                    family: family.name().to_string(),
                    index: i + 1,
                });
            }
        }
        let mut cell: Option<SignedPermMatrix> = None;
        for (p, path) in family.paths().iter().enumerate() {
            for t in &samples {
                let m = path.at(t);
                if &bruhat_perm(&m) != fixture.permutation() {
                    return Err(Error::PathCheck {
                        family: family.name().to_string(),
                        index: p + 1,
                        t: t.to_string(),
                        detail: "rank-jump permutation differs".into(),
                    });
                }
                let c = signed_cell(&m);
                match &cell {
                    None => cell = Some(c),
                    Some(prev) if prev != &c => {
                        return Err(Error::PathCheck {
                            family: family.name().to_string(),
                            index: p + 1,
                            t: t.to_string(),
                            detail: "signed cell changed along the loop".into(),
                        });
                    }
                    _ => {}
                }
            }
        }
        reports.push(GammaFamilyReport {
            name: family.name().to_string(),
            paths: k,
            cell: cell.expect("at least one sample per family"),
        });
    }
    Ok(GammaReport { permutation: fixture.permutation().clone(), families: reports })
}
