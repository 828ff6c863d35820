//! The ambient polynomial ring: a prime field plus named variables.

use crate::field::PrimeField;

/// Variable declaration order is descending grevlex significance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ring {
    pub field: PrimeField,
    pub vars: Vec<String>,
}

impl Ring {
    pub fn new(field: PrimeField, vars: Vec<String>) -> Self {
        Ring { field, vars }
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }
}
