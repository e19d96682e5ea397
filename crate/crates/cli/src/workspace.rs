//! Named values loaded from files. Names are unique; declaration order is
//! kept so that printing a whole workspace yields a loadable file again.

use std::collections::HashMap;

use actegory_core::action::{LeftAction, RightAction};
use actegory_core::fincat::{Cat, FunctorMap};
use actegory_core::profunctor::EndoProfunctor;
use actegory_core::Limits;

use crate::{CliError, Result};

#[derive(Debug, Clone)]
pub enum Value {
    Cat(Cat),
    Functor(FunctorMap),
    Left(LeftAction),
    Right(RightAction),
    Pro(EndoProfunctor),
}

impl Value {
    pub fn kind(&self) -> &'static str {
        match self {
            Value::Cat(_) => "category",
            Value::Functor(_) => "functor",
            Value::Left(_) => "leftaction",
            Value::Right(_) => "rightaction",
            Value::Pro(_) => "profunctor",
        }
    }
}

#[derive(Debug, Default)]
pub struct Workspace {
    order: Vec<(String, Value)>,
    index: HashMap<String, usize>,
}

impl Workspace {
    pub fn new() -> Workspace {
        Workspace::default()
    }

    pub fn insert(&mut self, name: &str, value: Value) -> Result<()> {
        if self.index.contains_key(name) {
            return Err(CliError::NameClash(name.to_string()));
        }
        self.index.insert(name.to_string(), self.order.len());
        self.order.push((name.to_string(), value));
        Ok(())
    }

    pub fn get(&self, name: &str) -> Result<&Value> {
        self.index
            .get(name)
            .map(|&i| &self.order[i].1)
            .ok_or_else(|| CliError::UnknownName(name.to_string()))
    }

    /// Declaration order.
    pub fn names(&self) -> impl Iterator<Item = (&String, &Value)> {
        self.order.iter().map(|(n, v)| (n, v))
    }

    pub fn category(&self, name: &str) -> Result<Cat> {
        match self.get(name)? {
            Value::Cat(c) => Ok(c.clone()),
            other => Err(CliError::Expr(format!("`{name}` is a {}, expected a category", other.kind()))),
        }
    }

    pub fn load_file(&mut self, path: &str, limits: &Limits) -> Result<()> {
        let text = std::fs::read_to_string(path)?;
        crate::format::parse_into(self, &text, path, limits)
    }

    pub fn load_str(&mut self, text: &str, path: &str, limits: &Limits) -> Result<()> {
        crate::format::parse_into(self, text, path, limits)
    }
}
