use btchow::chow::{DegreeReport, Witness};
use btchow::lattice::AbelianGroupStructure;
use btchow::symalg::GradedPiece;
use btchow::weil::{Lemma12Report, StratumDescriptor};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

/// Integers that fit in `i64` are written as JSON numbers, larger ones as
/// decimal strings. Both forms are accepted on input.
mod big {
    use num_bigint::BigInt;
    use num_traits::ToPrimitive;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Serialize, Deserialize)]
    #[serde(untagged)]
    enum Repr {
        Small(i64),
        Large(String),
    }

    fn to_repr(x: &BigInt) -> Repr {
        x.to_i64().map_or_else(|| Repr::Large(x.to_string()), Repr::Small)
    }

    fn from_repr<E: serde::de::Error>(r: Repr) -> Result<BigInt, E> {
        match r {
            Repr::Small(v) => Ok(BigInt::from(v)),
            Repr::Large(s) => s.parse().map_err(E::custom),
        }
    }

    pub fn serialize<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        to_repr(x).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        from_repr(Repr::deserialize(d)?)
    }

    pub mod vec {
        use super::*;

        pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
            v.iter().map(to_repr).collect::<Vec<_>>().serialize(s)
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
            Vec::<Repr>::deserialize(d)?.into_iter().map(from_repr).collect()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupRecord {
    pub free_rank: usize,
    #[serde(with = "big::vec")]
    pub torsion: Vec<BigInt>,
    pub text: String,
}

impl From<&AbelianGroupStructure> for GroupRecord {
    fn from(s: &AbelianGroupStructure) -> Self {
        GroupRecord { free_rank: s.free_rank, torsion: s.torsion.clone(), text: s.to_string() }
    }
}

impl GroupRecord {
    pub fn structure(&self) -> AbelianGroupStructure {
        AbelianGroupStructure { free_rank: self.free_rank, torsion: self.torsion.clone() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermRecord {
    #[serde(with = "big")]
    pub coefficient: BigInt,
    pub exponents: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WitnessRecord {
    #[serde(with = "big")]
    pub order: BigInt,
    pub terms: Vec<TermRecord>,
    pub text: String,
}

impl WitnessRecord {
    pub fn new(w: &Witness, piece: &GradedPiece, labels: &[String]) -> Self {
        let terms = piece
            .terms(&w.vector)
            .map(|(c, m)| TermRecord { coefficient: c.clone(), exponents: m.exponents().to_vec() })
            .collect();
        WitnessRecord { order: w.order.clone(), terms, text: piece.render(&w.vector, labels) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct H1Record {
    pub h1: GroupRecord,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ambient: Option<GroupRecord>,
    pub compared: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DegreeRecord {
    pub degree: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chow_group: Option<GroupRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kernel: Option<GroupRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cokernel: Option<GroupRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h1: Option<H1Record>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub witnesses: Vec<WitnessRecord>,
    pub timing_ms: f64,
}

impl DegreeRecord {
    pub fn from_report(r: &DegreeReport, piece: &GradedPiece, labels: &[String], timing_ms: f64) -> Self {
        DegreeRecord {
            degree: r.degree,
            chow_group: Some((&r.chow_group).into()),
            kernel: Some((&r.kernel).into()),
            cokernel: Some((&r.cokernel).into()),
            h1: r.h1_check.as_ref().map(|h| H1Record {
                h1: (&h.h1).into(),
                ambient: h.ambient.as_ref().map(Into::into),
                compared: h.compared,
            }),
            witnesses: r.witnesses.iter().map(|w| WitnessRecord::new(w, piece, labels)).collect(),
            timing_ms,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BlockRecord {
    /// 1-based points.
    pub points: Vec<usize>,
    pub stabilizer_order: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StratumRecord {
    /// 1-based points of the representative subset.
    pub subset: Vec<usize>,
    pub orbit_size: usize,
    pub stabilizer_order: usize,
    pub blocks: Vec<BlockRecord>,
    pub complement_check: bool,
    pub complement_details: String,
}

impl StratumRecord {
    pub fn new(s: &StratumDescriptor, check: &Lemma12Report) -> Self {
        let one_based = |v: &[usize]| v.iter().map(|i| i + 1).collect();
        StratumRecord {
            subset: one_based(&s.subset),
            orbit_size: s.orbit_size,
            stabilizer_order: s.stabilizer.order(),
            blocks: s
                .blocks
                .iter()
                .map(|b| BlockRecord { points: one_based(&b.points), stabilizer_order: b.stabilizer.order() })
                .collect(),
            complement_check: check.passed,
            complement_details: check.details.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StrataRecord {
    pub p: usize,
    pub strata: Vec<StratumRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OracleRecord {
    pub degree: usize,
    pub ideal_matches_exhaustive: bool,
    pub invariants_match_kernel_method: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportFile {
    pub problem: String,
    pub group_order: usize,
    pub q_rank: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p_rank: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t_rank: Option<usize>,
    pub tasks: Vec<String>,
    pub degrees: Vec<DegreeRecord>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub strata: Vec<StrataRecord>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub oracle: Vec<OracleRecord>,
}

impl ReportFile {
    /// Copy with every timing zeroed, for comparing runs.
    pub fn without_timing(&self) -> ReportFile {
        let mut r = self.clone();
        for d in &mut r.degrees {
            d.timing_ms = 0.0;
        }
        r
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<ReportFile, serde_json::Error> {
        serde_json::from_str(text)
    }
}
