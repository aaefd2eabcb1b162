//! JSON forms of polynomials, tables and family descriptors.
//!
//! A polynomial is a term list `[{"e":[e1,…,en],"c":"p/q+r/sz"}, …]` in
//! descending term order. Field elements are always strings.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::families::{
    self, Case2Line, CaseParams, OperatorFamily, Preset, Segment, Univariate,
};
use crate::field::FieldElement;
use crate::pddo::Pddo;
use crate::poly::{Monomial, MultiPoly, SlotPoly};
use crate::table::TableEntry;

/// Largest exponent accepted from untrusted input.
pub const MAX_EXPONENT: u32 = 64;
/// Largest number of variables accepted from untrusted input.
pub const MAX_VARS: usize = 32;

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermJson {
    pub e: Vec<u32>,
    pub c: FieldElement,
}

pub fn poly_terms(p: &MultiPoly) -> Vec<TermJson> {
    p.terms()
        .rev()
        .map(|(m, c)| TermJson {
            e: m.0.clone(),
            c: c.clone(),
        })
        .collect()
}

pub fn poly_to_value(p: &MultiPoly) -> Value {
    serde_json::to_value(poly_terms(p)).expect("terms serialize")
}

/// Parse a term list. `n` fixes the number of variables; otherwise it is
/// read from the exponent vectors, and an empty list needs `n`.
pub fn poly_from_terms(terms: &[TermJson], n: Option<usize>) -> Result<MultiPoly> {
    let n = match (n, terms.first()) {
        (Some(n), _) => n,
        (None, Some(t)) => t.e.len(),
        (None, None) => return Err(Error::Parse("empty term list without a variable count".into())),
    };
    if n == 0 || n > MAX_VARS {
        return Err(Error::Parse(format!("variable count {} out of range", n)));
    }
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::with_capacity(terms.len());
    for t in terms {
        if t.e.len() != n {
            return Err(Error::DimensionMismatch(n, t.e.len()));
        }
        if t.e.iter().any(|&k| k > MAX_EXPONENT) {
            return Err(Error::Parse(format!("exponent above {}", MAX_EXPONENT)));
        }
        if !seen.insert(Monomial(t.e.clone())) {
            return Err(Error::Parse(format!("repeated exponent {:?}", t.e)));
        }
        out.push((t.e.clone(), t.c.clone()));
    }
    MultiPoly::from_terms(n, out)
}

pub fn parse_poly(text: &str, n: Option<usize>) -> Result<MultiPoly> {
    let terms: Vec<TermJson> =
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    poly_from_terms(&terms, n)
}

pub fn print_poly(p: &MultiPoly) -> String {
    serde_json::to_string(&poly_terms(p)).expect("terms serialize")
}

fn slot_from_terms(terms: &[TermJson]) -> Result<SlotPoly> {
    SlotPoly::from_multipoly(poly_from_terms(terms, Some(2))?)
}

pub fn table_to_value(n: usize, entries: &[TableEntry]) -> Value {
    json!({
        "n": n,
        "entries": entries.iter().map(|e| json!({
            "perm": e.perm.one_line(),
            "word": e.word,
            "poly": poly_to_value(&e.poly),
        })).collect::<Vec<_>>(),
    })
}

/// Serializable description of a family.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case", deny_unknown_fields)]
pub enum FamilyDescriptor {
    Case1 {
        n: usize,
        params: [FieldElement; 4],
        e: FieldElement,
    },
    Case2 {
        n: usize,
        params: [FieldElement; 4],
        lines: Vec<Case2Line>,
    },
    DegenT {
        n: usize,
        qhat: Vec<TermJson>,
        p: Univariate,
        pairs: Vec<(Univariate, Univariate)>,
    },
    Vanq0 {
        n: usize,
        mu: FieldElement,
        segments: Vec<SegmentJson>,
    },
    Preset {
        n: usize,
        name: PresetName,
        #[serde(default)]
        param: Option<FieldElement>,
    },
    ZetaPair {
        a: FieldElement,
        b: FieldElement,
        variant: u8,
    },
    User {
        n: usize,
        ops: Vec<OperatorJson>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PresetName {
    PureDdiff,
    Demazure,
    Grothendieck,
}

#[allow(clippy::large_enum_variant)]
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
pub enum SegmentJson {
    Scalar(usize),
    Isolated {
        index: usize,
        phi: Vec<TermJson>,
        psi: Vec<TermJson>,
    },
    Interval {
        start: usize,
        params: [FieldElement; 4],
        lines: Vec<Case2Line>,
    },
}

/// An operator by its invariant pair (T, Q0) in the slots (u, v).
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OperatorJson {
    pub t: Vec<TermJson>,
    pub q0: Vec<TermJson>,
}

impl OperatorJson {
    pub fn from_op(op: &Pddo) -> Self {
        OperatorJson {
            t: poly_terms(op.t().as_multipoly()),
            q0: poly_terms(op.q0().as_multipoly()),
        }
    }

    pub fn to_op(&self) -> Result<Pddo> {
        Pddo::from_t_q0(slot_from_terms(&self.t)?, slot_from_terms(&self.q0)?)
    }
}

fn case_params(p: &[FieldElement; 4]) -> CaseParams {
    CaseParams::new(p[0].clone(), p[1].clone(), p[2].clone(), p[3].clone())
}

fn check_n(n: usize) -> Result<()> {
    if !(2..=MAX_VARS).contains(&n) {
        return Err(Error::Constraint(format!("n = {} out of range 2..={}", n, MAX_VARS)));
    }
    Ok(())
}

impl FamilyDescriptor {
    pub fn build(&self) -> Result<OperatorFamily> {
        match self {
            FamilyDescriptor::Case1 { n, params, e } => {
                check_n(*n)?;
                families::main_case1(*n, &case_params(params), e)
            }
            FamilyDescriptor::Case2 { n, params, lines } => {
                check_n(*n)?;
                families::main_case2(*n, &case_params(params), lines)
            }
            FamilyDescriptor::DegenT { n, qhat, p, pairs } => {
                check_n(*n)?;
                families::degenerate_t_family(*n, &slot_from_terms(qhat)?, p, pairs)
            }
            FamilyDescriptor::Vanq0 { n, mu, segments } => {
                check_n(*n)?;
                let segs = segments
                    .iter()
                    .map(|s| {
                        Ok(match s {
                            SegmentJson::Scalar(i) => Segment::Scalar(*i),
                            SegmentJson::Isolated { index, phi, psi } => Segment::Isolated {
                                index: *index,
                                phi: slot_from_terms(phi)?,
                                psi: slot_from_terms(psi)?,
                            },
                            SegmentJson::Interval {
                                start,
                                params,
                                lines,
                            } => Segment::Interval {
                                start: *start,
                                params: case_params(params),
                                lines: lines.clone(),
                            },
                        })
                    })
                    .collect::<Result<Vec<_>>>()?;
                families::with_vanishing_q0(*n, mu, &segs)
            }
            FamilyDescriptor::Preset { n, name, param } => {
                check_n(*n)?;
                let need = || {
                    param
                        .clone()
                        .ok_or_else(|| Error::Constraint("preset needs a parameter".into()))
                };
                let p = match name {
                    PresetName::PureDdiff => Preset::PureDdiff(need()?),
                    PresetName::Demazure => {
                        if param.is_some() {
                            return Err(Error::Constraint("demazure takes no parameter".into()));
                        }
                        Preset::Demazure
                    }
                    PresetName::Grothendieck => Preset::Grothendieck(need()?),
                };
                families::preset(&p, *n)
            }
            FamilyDescriptor::ZetaPair { a, b, variant } => families::zeta_pair_family(a, b, *variant),
            FamilyDescriptor::User { n, ops } => {
                check_n(*n)?;
                let ops = ops.iter().map(OperatorJson::to_op).collect::<Result<Vec<_>>>()?;
                OperatorFamily::user_supplied(*n, ops)
            }
        }
    }
}

pub fn parse_descriptor(text: &str) -> Result<FamilyDescriptor> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

/// A comma-separated list of field elements, as in `1,2,1/2,3+z`.
pub fn parse_params(text: &str) -> Result<Vec<FieldElement>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',').map(|s| s.trim().parse()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poly_round_trip() {
        let p = MultiPoly::from_terms(
            3,
            vec![
                (vec![2, 1, 0], FieldElement::from(1)),
                (vec![0, 0, 0], FieldElement::from_ratio(-1, 2)),
                (vec![1, 0, 1], "3/2-z".parse().unwrap()),
            ],
        )
        .unwrap();
        let text = print_poly(&p);
        assert_eq!(
            text,
            r#"[{"e":[2,1,0],"c":"1"},{"e":[1,0,1],"c":"3/2-z"},{"e":[0,0,0],"c":"-1/2"}]"#
        );
        assert_eq!(parse_poly(&text, None).unwrap(), p);
        assert_eq!(parse_poly("[]", Some(2)).unwrap(), MultiPoly::zero(2));
        assert!(parse_poly("[]", None).is_err());
        assert!(parse_poly(r#"[{"e":[1],"c":"1"},{"e":[1],"c":"2"}]"#, None).is_err());
        assert!(parse_poly(r#"[{"e":[1],"c":1}]"#, None).is_err());
        assert!(parse_poly(r#"[{"e":[1,0],"c":"1"},{"e":[1],"c":"2"}]"#, None).is_err());
        assert!(parse_poly(r#"[{"e":[99],"c":"1"}]"#, None).is_err());
    }

    #[test]
    fn descriptors() {
        let d = parse_descriptor(r#"{"family":"case1","n":4,"params":["1","2","1","2"],"e":"3"}"#).unwrap();
        assert_eq!(d.build().unwrap().ops().len(), 3);
        let d = parse_descriptor(r#"{"family":"case2","n":4,"params":["1","2","1","2"],"lines":["l1","l4","l2"]}"#)
            .unwrap();
        assert!(d.build().is_ok());
        let d = parse_descriptor(r#"{"family":"preset","n":3,"name":"pure_ddiff","param":"1"}"#).unwrap();
        assert!(d.build().is_ok());
        let d = parse_descriptor(r#"{"family":"zeta-pair","a":"1","b":"0","variant":2}"#).unwrap();
        assert_eq!(d.build().unwrap().n(), 3);
        let d = parse_descriptor(
            r#"{"family":"vanq0","n":4,"mu":"1","segments":[
                {"isolated":{"index":1,"phi":[{"e":[0,0],"c":"1"}],"psi":[{"e":[1,0],"c":"1"}]}},
                {"scalar":2},{"scalar":3}]}"#,
        )
        .unwrap();
        assert!(d.build().is_ok());
        let d = parse_descriptor(
            r#"{"family":"degen-t","n":3,"qhat":[{"e":[0,0],"c":"1"}],"p":["0","1"],"pairs":[[["0","1"],["1"]],[["1"],["0","1"]]]}"#,
        )
        .unwrap();
        assert!(d.build().is_ok());
        let user = FamilyDescriptor::User {
            n: 3,
            ops: vec![OperatorJson::from_op(&Pddo::from_t_q0(SlotPoly::u(), SlotPoly::v()).unwrap()); 2],
        };
        let text = serde_json::to_string(&user).unwrap();
        assert_eq!(parse_descriptor(&text).unwrap().build().unwrap().ops().len(), 2);
        assert!(parse_descriptor(r#"{"family":"case1","n":4,"params":["1","2","1","2"],"e":"1","x":1}"#).is_err());
        assert!(parse_descriptor(r#"{"family":"case9"}"#).is_err());
    }

    #[test]
    fn params_list() {
        assert_eq!(
            parse_params("1, 2,1/2").unwrap(),
            vec![FieldElement::from(1), FieldElement::from(2), FieldElement::from_ratio(1, 2)]
        );
        assert!(parse_params("1,,2").is_err());
        assert!(parse_params("").unwrap().is_empty());
    }
}
