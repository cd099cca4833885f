//! Named example chamber systems. Every build is checked against the
//! entry's expected chamber count and inferred type; `build_verified` also
//! checks the building verdict.

pub mod f2;
pub mod flags;
pub mod neumaier;

use serde::Serialize;

use crate::chamber::{
    from_cosets, infer_type_matrix, orbit_quotient, quotient, ChamberSystem, ChamberSystemJson, HomogeneousSpec,
};
use crate::coxeter::CoxeterMatrix;
use crate::error::{Error, Result};
use crate::verify::is_building_inferred;

pub use flags::{flag_action, flag_system, gl4_spec, projective_flags, symplectic_quadrangle};
pub use neumaier::Neumaier;

#[derive(Clone, Copy, Debug, Serialize)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub description: &'static str,
    pub chambers: usize,
    /// Inferred type, or `None` when type inference is expected to fail.
    pub r#type: Option<&'static str>,
    /// Verdict of the building check against the inferred type.
    pub building: bool,
    pub metadata: &'static [(&'static str, &'static str)],
    #[serde(skip)]
    build: fn() -> Result<ChamberSystem>,
}

fn singer_quotient() -> Result<ChamberSystem> {
    Ok(orbit_quotient(&projective_flags(4)?, &[flag_action(&f2::SINGER4)])?.system)
}

fn singer5_quotient() -> Result<ChamberSystem> {
    Ok(quotient(&projective_flags(4)?, &[flag_action(&f2::SINGER4.pow(3))])?.system)
}

fn fano_singer_quotient() -> Result<ChamberSystem> {
    Ok(orbit_quotient(&projective_flags(3)?, &[flag_action(&f2::SINGER3)])?.system)
}

const ENTRIES: &[CatalogEntry] = &[
    CatalogEntry {
        name: "fano-flags",
        description: "flags of the Fano plane PG(2,2)",
        chambers: 21,
        r#type: Some("A2"),
        building: true,
        metadata: &[],
        build: || projective_flags(3),
    },
    CatalogEntry {
        name: "gq22",
        description: "flags of the symplectic generalized quadrangle W(2)",
        chambers: 45,
        r#type: Some("C2"),
        building: true,
        metadata: &[("form", "[[0,I],[I,0]]")],
        build: symplectic_quadrangle,
    },
    CatalogEntry {
        name: "a3-f2",
        description: "flags of PG(3,2); type i changes the i-dimensional subspace",
        chambers: 315,
        r#type: Some("A3"),
        building: true,
        metadata: &[],
        build: || projective_flags(4),
    },
    CatalogEntry {
        name: "a3-f2-cosets",
        description: "GL(4,2) modulo its Borel subgroup, acting on 15 points",
        chambers: 315,
        r#type: Some("A3"),
        building: true,
        metadata: &[],
        build: || from_cosets(&gl4_spec()?),
    },
    CatalogEntry {
        name: "neumaier-a7",
        description: "A7 geometry of 7 points, 35 triples and 15 Fano planes",
        chambers: 315,
        r#type: Some("C3"),
        building: false,
        metadata: &[("planes", "Alt(7)-orbit of the lexicographically least Fano plane")],
        build: || Neumaier::new()?.chamber_system(),
    },
    CatalogEntry {
        name: "neumaier-a7-cosets",
        description: "A7 modulo a flag stabilizer of order 8",
        chambers: 315,
        r#type: Some("C3"),
        building: false,
        metadata: &[],
        build: || from_cosets(&Neumaier::new()?.spec()?),
    },
    CatalogEntry {
        name: "singer-quotient",
        description: "a3-f2 modulo the Singer cycle of order 15 (orbit quotient)",
        chambers: 21,
        r#type: None,
        building: false,
        metadata: &[("singer_polynomial", "x^4+x+1")],
        build: singer_quotient,
    },
    CatalogEntry {
        name: "singer5-quotient",
        description: "a3-f2 modulo the cube of the Singer cycle, of order 5",
        chambers: 63,
        r#type: Some("A3"),
        building: false,
        metadata: &[("singer_polynomial", "x^4+x+1")],
        build: singer5_quotient,
    },
    CatalogEntry {
        name: "fano-singer-quotient",
        description: "fano-flags modulo a Singer cycle of order 7",
        chambers: 3,
        r#type: None,
        building: false,
        metadata: &[("singer_polynomial", "x^3+x+1")],
        build: fano_singer_quotient,
    },
    CatalogEntry {
        name: "coxeter-a3",
        description: "Coxeter complex of type A3",
        chambers: 24,
        r#type: Some("A3"),
        building: true,
        metadata: &[],
        build: || CoxeterMatrix::a(3).coxeter_complex(),
    },
    CatalogEntry {
        name: "coxeter-c3",
        description: "Coxeter complex of type C3",
        chambers: 48,
        r#type: Some("C3"),
        building: true,
        metadata: &[],
        build: || CoxeterMatrix::c(3).coxeter_complex(),
    },
    CatalogEntry {
        name: "coxeter-h3",
        description: "Coxeter complex of type H3",
        chambers: 120,
        r#type: Some("H3"),
        building: true,
        metadata: &[],
        build: || CoxeterMatrix::h3().coxeter_complex(),
    },
];

pub fn entries() -> &'static [CatalogEntry] {
    ENTRIES
}

pub fn entry(name: &str) -> Result<&'static CatalogEntry> {
    ENTRIES.iter().find(|e| e.name == name).ok_or_else(|| Error::UnknownCatalogEntry(name.to_string()))
}

impl CatalogEntry {
    /// Builds the system and checks it against the expected statistics.
    pub fn build(&self) -> Result<ChamberSystem> {
        let sys = (self.build)()?;
        let mismatch = |what, expected: String, found: String| Error::CatalogMismatch {
            name: self.name.to_string(),
            what,
            expected,
            found,
        };
        if sys.len() != self.chambers {
            return Err(mismatch("chamber count", self.chambers.to_string(), sys.len().to_string()));
        }
        let found = infer_type_matrix(&sys).ok().and_then(|m| m.type_name());
        if found.as_deref() != self.r#type {
            let show = |t: Option<&str>| t.unwrap_or("none").to_string();
            return Err(mismatch("type", show(self.r#type), show(found.as_deref())));
        }
        Ok(sys)
    }

    /// `build` plus the building check, for the full expected-statistics
    /// table.
    pub fn build_verified(&self) -> Result<ChamberSystem> {
        let sys = self.build()?;
        let found = is_building_inferred(&sys)?.building;
        if found != self.building {
            return Err(Error::CatalogMismatch {
                name: self.name.to_string(),
                what: "building verdict",
                expected: self.building.to_string(),
                found: found.to_string(),
            });
        }
        Ok(sys)
    }

    /// JSON form with the entry's metadata attached.
    pub fn to_json(&self, sys: &ChamberSystem) -> ChamberSystemJson {
        let mut json = sys.to_json();
        json.metadata.insert("catalog".into(), self.name.into());
        json.metadata.extend(self.metadata.iter().map(|&(k, v)| (k.to_string(), v.to_string())));
        json
    }
}

/// Builds a catalog entry by name.
pub fn build(name: &str) -> Result<ChamberSystem> {
    entry(name)?.build()
}

/// Group-theoretic data behind the coset entries, including vertex groups.
pub fn homogeneous(name: &str) -> Result<HomogeneousSpec> {
    match name {
        "a3-f2-cosets" => gl4_spec(),
        "neumaier-a7-cosets" => Neumaier::new()?.spec(),
        _ => Err(Error::UnknownCatalogEntry(name.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_entry_builds() {
        for e in entries() {
            let sys = e.build().unwrap_or_else(|err| panic!("{}: {err}", e.name));
            assert_eq!(sys.len(), e.chambers);
        }
    }

    #[test]
    fn building_verdicts() {
        for name in ["fano-flags", "gq22", "fano-singer-quotient", "coxeter-c3", "singer5-quotient"] {
            entry(name).unwrap().build_verified().unwrap();
        }
    }

    #[test]
    fn unknown_name() {
        assert!(matches!(build("nope"), Err(Error::UnknownCatalogEntry(_))));
        assert!(homogeneous("fano-flags").is_err());
    }
}
