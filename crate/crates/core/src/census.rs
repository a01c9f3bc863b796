//! Catalog census: one row of property verdicts per module.

use std::fmt::Write as _;

use crate::ads::{cs_family, is_ads, AdsMethod, CsProperty};
use crate::catalog::Entry;
use crate::error::{Error, Guards, Result};
use crate::injectivity::{module_property, InjectivityProperty};
use crate::par;
use crate::structure::{discreteness, is_completely_ads, Discreteness};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Property {
    Ads(AdsMethod),
    C1,
    C2,
    C3,
    QuasiContinuous,
    Continuous,
    D1,
    D2,
    D3,
    CompletelyAds,
    Injective,
    QuasiInjective,
}

impl Property {
    pub fn all() -> Vec<Property> {
        let mut v: Vec<Property> = AdsMethod::ALL.iter().map(|&m| Property::Ads(m)).collect();
        v.extend([
            Property::C1,
            Property::C2,
            Property::C3,
            Property::QuasiContinuous,
            Property::Continuous,
            Property::D1,
            Property::D2,
            Property::D3,
            Property::CompletelyAds,
            Property::Injective,
            Property::QuasiInjective,
        ]);
        v
    }

    pub fn name(self) -> String {
        match self {
            Property::Ads(m) => format!("ads-{}", m.tag()),
            Property::C1 => "c1".into(),
            Property::C2 => "c2".into(),
            Property::C3 => "c3".into(),
            Property::QuasiContinuous => "quasi-continuous".into(),
            Property::Continuous => "continuous".into(),
            Property::D1 => "d1".into(),
            Property::D2 => "d2".into(),
            Property::D3 => "d3".into(),
            Property::CompletelyAds => "completely-ads".into(),
            Property::Injective => "injective".into(),
            Property::QuasiInjective => "quasi-injective".into(),
        }
    }

    /// Comma-separated names; `ads` expands to all six methods and `all` to everything.
    pub fn parse_list(s: &str) -> Result<Vec<Property>> {
        let mut out: Vec<Property> = Vec::new();
        for name in s.split(',').map(str::trim).filter(|n| !n.is_empty()) {
            let add: Vec<Property> = match name {
                "all" => Property::all(),
                "ads" => AdsMethod::ALL.iter().map(|&m| Property::Ads(m)).collect(),
                _ => vec![Property::all()
                    .into_iter()
                    .find(|p| p.name() == name)
                    .ok_or_else(|| Error::UnknownName(name.to_string()))?],
            };
            for p in add {
                if !out.contains(&p) {
                    out.push(p);
                }
            }
        }
        // Canonical column order regardless of how they were listed.
        let order = Property::all();
        out.sort_by_key(|p| order.iter().position(|q| q == p));
        Ok(out)
    }

    fn evaluate(self, e: &Entry, guards: &Guards) -> Result<bool> {
        let m = &e.module;
        match self {
            Property::Ads(method) => Ok(is_ads(m, method, guards)?.verdict),
            Property::C1 => cs_family(m, CsProperty::C1, guards),
            Property::C2 => cs_family(m, CsProperty::C2, guards),
            Property::C3 => cs_family(m, CsProperty::C3, guards),
            Property::QuasiContinuous => cs_family(m, CsProperty::QuasiContinuous, guards),
            Property::Continuous => cs_family(m, CsProperty::Continuous, guards),
            Property::D1 => discreteness(m, Discreteness::D1, guards),
            Property::D2 => discreteness(m, Discreteness::D2, guards),
            Property::D3 => discreteness(m, Discreteness::D3, guards),
            Property::CompletelyAds => is_completely_ads(m, guards),
            Property::Injective => module_property(m, InjectivityProperty::Injective, guards),
            Property::QuasiInjective => {
                module_property(m, InjectivityProperty::QuasiInjective, guards)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Cell {
    Value(bool),
    /// A size guard stopped the computation.
    Guard,
}

impl Cell {
    pub fn as_str(&self) -> &'static str {
        match self {
            Cell::Value(true) => "true",
            Cell::Value(false) => "false",
            Cell::Guard => "guard",
        }
    }

    pub fn value(&self) -> Option<bool> {
        match self {
            Cell::Value(v) => Some(*v),
            Cell::Guard => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusRow {
    pub ring_id: String,
    pub module_id: String,
    pub size: usize,
    pub cells: Vec<(Property, Cell)>,
    /// Replayable digest of a definitional counterexample when the module is not ADS.
    pub witness: Option<String>,
}

impl CensusRow {
    pub fn get(&self, p: Property) -> Option<&Cell> {
        self.cells.iter().find(|(q, _)| *q == p).map(|(_, c)| c)
    }

    pub fn value(&self, p: Property) -> Option<bool> {
        self.get(p).and_then(Cell::value)
    }

    /// The common verdict of the decided ADS columns.
    pub fn ads(&self) -> Option<bool> {
        self.cells
            .iter()
            .filter(|(p, _)| matches!(p, Property::Ads(_)))
            .find_map(|(_, c)| c.value())
    }

    pub fn to_text(&self) -> String {
        let mut s = format!(
            "ring={} module={} size={}",
            self.ring_id, self.module_id, self.size
        );
        for (p, c) in &self.cells {
            write!(s, " {}={}", p.name(), c.as_str()).unwrap();
        }
        if let Some(w) = &self.witness {
            write!(s, " witness={w}").unwrap();
        }
        s
    }
}

/// Test hook: flip one ADS method's verdict on every module.
#[derive(Clone, Copy, Debug, Default)]
pub struct Mutant(pub Option<AdsMethod>);

pub fn census_row(
    e: &Entry,
    props: &[Property],
    guards: &Guards,
    mutant: Mutant,
) -> Result<CensusRow> {
    let mut cells = Vec::with_capacity(props.len());
    for &p in props {
        let cell = match p.evaluate(e, guards) {
            Ok(v) => Cell::Value(if mutant.0.map(Property::Ads) == Some(p) {
                !v
            } else {
                v
            }),
            Err(Error::SizeGuardExceeded { .. }) => Cell::Guard,
            Err(err) => return Err(err),
        };
        cells.push((p, cell));
    }
    let decided: Vec<(Property, bool)> = cells
        .iter()
        .filter(|(p, _)| matches!(p, Property::Ads(_)))
        .filter_map(|(p, c)| c.value().map(|v| (*p, v)))
        .collect();
    if decided.windows(2).any(|w| w[0].1 != w[1].1) {
        let detail: Vec<String> = decided
            .iter()
            .map(|(p, v)| format!("{}={v}", p.name()))
            .collect();
        return Err(Error::Disagreement(format!(
            "{}:{} {}",
            e.ring_id,
            e.module_id,
            detail.join(" ")
        )));
    }
    let mut witness = None;
    if decided.first().is_some_and(|(_, v)| !v) {
        if let Ok(v) = is_ads(&e.module, AdsMethod::Definition, guards) {
            if let Some(w) = v.witness {
                witness = Some(w.digest(&e.module, guards)?);
            }
        }
    }
    Ok(CensusRow {
        ring_id: e.ring_id.clone(),
        module_id: e.module_id.clone(),
        size: e.module.size(),
        cells,
        witness,
    })
}

/// Rows in the entries' order; the first disagreement or hard error aborts.
pub fn census(
    entries: &[Entry],
    props: &[Property],
    guards: &Guards,
    jobs: usize,
    mutant: Mutant,
) -> Result<Vec<CensusRow>> {
    par::map(entries, jobs, |e| census_row(e, props, guards, mutant))
        .into_iter()
        .collect()
}

pub fn header(props: &[Property]) -> Vec<String> {
    let mut h = vec!["ring".to_string(), "module".into(), "size".into()];
    h.extend(props.iter().map(|p| p.name()));
    h.push("witness".into());
    h
}

pub fn to_csv(props: &[Property], rows: &[CensusRow]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header(props)).expect("in-memory write");
    for r in rows {
        let mut rec = vec![r.ring_id.clone(), r.module_id.clone(), r.size.to_string()];
        rec.extend(r.cells.iter().map(|(_, c)| c.as_str().to_string()));
        rec.push(r.witness.clone().unwrap_or_default());
        w.write_record(&rec).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("ascii output")
}

pub fn to_text(rows: &[CensusRow]) -> String {
    rows.iter().map(|r| r.to_text() + "\n").collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::Catalog;

    #[test]
    fn property_lists() {
        assert_eq!(Property::parse_list("ads").unwrap().len(), 6);
        assert_eq!(Property::parse_list("all").unwrap().len(), 17);
        assert_eq!(
            Property::parse_list("c2,ads-cyclic,c1").unwrap(),
            vec![Property::Ads(AdsMethod::Cyclic), Property::C1, Property::C2]
        );
        assert!(Property::parse_list("c4").is_err());
    }

    #[test]
    fn rows_and_mutant() {
        let c = Catalog::load("default").unwrap();
        let g = Guards::default();
        let e = c.find("zmod8:Z2+Z8").unwrap();
        let props = Property::parse_list("ads,quasi-continuous").unwrap();
        let row = census_row(&e, &props, &g, Mutant::default()).unwrap();
        assert_eq!(row.ads(), Some(false));
        assert!(row.witness.is_some());
        let bad = census_row(&e, &props, &g, Mutant(Some(AdsMethod::Cyclic)));
        assert!(matches!(bad, Err(Error::Disagreement(_))));
        let csv = to_csv(&props, &[row]);
        assert!(csv.starts_with("ring,module,size,ads-definition,"));
        assert_eq!(csv.lines().count(), 2);
    }

    #[test]
    fn empty_census_has_header_only() {
        let props = Property::all();
        let out = to_csv(&props, &[]);
        assert_eq!(out.lines().count(), 1);
    }
}
