use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::HarnessError;
use crate::subset::Subset;

/// One named part of an instance. Sets and maps both render as index arrays;
/// the key says which.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum WitnessValue {
    Index(usize),
    Indices(Vec<usize>),
    Family(Vec<Vec<usize>>),
    Text(String),
}

/// An instance of a statement: named scalars, subsets, families and maps.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Witness(BTreeMap<String, WitnessValue>);

impl Witness {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(mut self, key: &str, s: &Subset) -> Self {
        self.0.insert(key.into(), WitnessValue::Indices(s.to_vec()));
        self
    }

    pub fn index(mut self, key: &str, i: usize) -> Self {
        self.0.insert(key.into(), WitnessValue::Index(i));
        self
    }

    pub fn map(mut self, key: &str, m: &[usize]) -> Self {
        self.0.insert(key.into(), WitnessValue::Indices(m.to_vec()));
        self
    }

    pub fn family(mut self, key: &str, sets: &[Subset]) -> Self {
        self.0
            .insert(key.into(), WitnessValue::Family(sets.iter().map(Subset::to_vec).collect()));
        self
    }

    pub fn text(mut self, key: &str, t: &str) -> Self {
        self.0.insert(key.into(), WitnessValue::Text(t.into()));
        self
    }

    pub fn entries(&self) -> impl Iterator<Item = (&String, &WitnessValue)> {
        self.0.iter()
    }

    pub fn get(&self, key: &str) -> Option<&WitnessValue> {
        self.0.get(key)
    }

    fn missing(key: &str) -> HarnessError {
        HarnessError::BadWitness(format!("missing or mistyped `{key}`"))
    }

    fn to_subset(key: &str, universe: usize, xs: &[usize]) -> Result<Subset, HarnessError> {
        if let Some(bad) = xs.iter().find(|&&x| x >= universe) {
            return Err(HarnessError::BadWitness(format!(
                "`{key}` mentions {bad}, outside 0..{universe}"
            )));
        }
        Ok(Subset::from_indices(universe, xs.iter().copied()))
    }

    pub fn get_set(&self, key: &str, universe: usize) -> Result<Subset, HarnessError> {
        match self.0.get(key) {
            Some(WitnessValue::Indices(xs)) => Self::to_subset(key, universe, xs),
            _ => Err(Self::missing(key)),
        }
    }

    pub fn get_index(&self, key: &str) -> Result<usize, HarnessError> {
        match self.0.get(key) {
            Some(WitnessValue::Index(i)) => Ok(*i),
            _ => Err(Self::missing(key)),
        }
    }

    pub fn get_map(&self, key: &str) -> Result<Vec<usize>, HarnessError> {
        match self.0.get(key) {
            Some(WitnessValue::Indices(xs)) => Ok(xs.clone()),
            _ => Err(Self::missing(key)),
        }
    }

    pub fn get_family(&self, key: &str, universe: usize) -> Result<Vec<Subset>, HarnessError> {
        match self.0.get(key) {
            Some(WitnessValue::Family(sets)) => {
                sets.iter().map(|xs| Self::to_subset(key, universe, xs)).collect()
            }
            // an empty family reads back as an empty index array
            Some(WitnessValue::Indices(xs)) if xs.is_empty() => Ok(Vec::new()),
            _ => Err(Self::missing(key)),
        }
    }

    pub fn get_text(&self, key: &str) -> Result<&str, HarnessError> {
        match self.0.get(key) {
            Some(WitnessValue::Text(t)) => Ok(t),
            _ => Err(Self::missing(key)),
        }
    }
}

impl fmt::Display for Witness {
    /// `key=value` pairs with JSON values, space separated.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (k, v)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            let json = serde_json::to_string(v).map_err(|_| fmt::Error)?;
            write!(f, "{k}={json}")?;
        }
        Ok(())
    }
}
