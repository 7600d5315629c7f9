use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::FiniteLattice;
use crate::relation::Relation;

/// `{"name", "elements", "covers"}` where each cover is `[lower, upper]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LatticeFile {
    pub name: String,
    pub elements: Vec<String>,
    pub covers: Vec<(String, String)>,
}

impl LatticeFile {
    pub fn from_lattice(lat: &FiniteLattice) -> Self {
        let names = lat.names();
        LatticeFile {
            name: lat.name().to_string(),
            elements: names.to_vec(),
            covers: lat.covers().iter().map(|&(a, b)| (names[a].clone(), names[b].clone())).collect(),
        }
    }

    pub fn build(&self) -> Result<FiniteLattice> {
        FiniteLattice::from_covers(self.name.clone(), self.elements.clone(), &self.covers)
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Closure {
    #[default]
    None,
    Reflexive,
    SymmetricReflexive,
}

/// `{"lattice", "pairs", "close"}`; `close` is applied after loading.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RelationFile {
    pub lattice: String,
    pub pairs: Vec<(String, String)>,
    #[serde(default)]
    pub close: Closure,
}

impl RelationFile {
    pub fn from_relation(lat: &FiniteLattice, r: &Relation) -> Self {
        let names = lat.names();
        RelationFile {
            lattice: lat.name().to_string(),
            pairs: r.pairs().map(|(x, y)| (names[x].clone(), names[y].clone())).collect(),
            close: Closure::None,
        }
    }

    pub fn build(&self, lat: &FiniteLattice) -> Result<Relation> {
        if self.lattice != lat.name() {
            return Err(Error::Parse(format!(
                "relation is over lattice \"{}\" but \"{}\" was given",
                self.lattice,
                lat.name()
            )));
        }
        let pairs = self
            .pairs
            .iter()
            .map(|(a, b)| Ok((lat.index_of(a)?, lat.index_of(b)?)))
            .collect::<Result<Vec<_>>>()?;
        let r = Relation::from_pairs(lat.n(), pairs);
        Ok(match self.close {
            Closure::None => r,
            Closure::Reflexive => r.reflexive_closure(),
            Closure::SymmetricReflexive => r.symmetric_reflexive_closure(),
        })
    }
}

fn parse<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

pub fn lattice_from_json(text: &str) -> Result<FiniteLattice> {
    parse::<LatticeFile>(text)?.build()
}

pub fn lattice_to_json(lat: &FiniteLattice) -> String {
    let mut s = serde_json::to_string_pretty(&LatticeFile::from_lattice(lat)).expect("serializable");
    s.push('\n');
    s
}

pub fn relation_from_json(text: &str, lat: &FiniteLattice) -> Result<Relation> {
    parse::<RelationFile>(text)?.build(lat)
}

pub fn relation_to_json(lat: &FiniteLattice, r: &Relation) -> String {
    let mut s = serde_json::to_string_pretty(&RelationFile::from_relation(lat, r)).expect("serializable");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    #[test]
    fn lattice_round_trip() {
        for lat in named::all() {
            let text = lattice_to_json(&lat);
            let back = lattice_from_json(&text).unwrap();
            assert_eq!(back, lat);
            assert_eq!(lattice_to_json(&back), text);
        }
    }

    #[test]
    fn relation_closure_and_host() {
        let c3 = named::chain(3);
        let text = r#"{"lattice": "C3", "pairs": [["0","m"],["m","1"]], "close": "symmetric-reflexive"}"#;
        let t = relation_from_json(text, &c3).unwrap();
        assert!(t.is_tolerance(&c3));
        assert_eq!(t.count(), 7);
        let back = relation_from_json(&relation_to_json(&c3, &t), &c3).unwrap();
        assert_eq!(back, t);

        let wrong = r#"{"lattice": "B2", "pairs": []}"#;
        assert!(matches!(relation_from_json(wrong, &c3), Err(Error::Parse(_))));
        let unknown = r#"{"lattice": "C3", "pairs": [["0","z"]]}"#;
        assert_eq!(relation_from_json(unknown, &c3).unwrap_err(), Error::UnknownLabel("z".into()));
        assert!(matches!(lattice_from_json("{"), Err(Error::Parse(_))));
    }
}
