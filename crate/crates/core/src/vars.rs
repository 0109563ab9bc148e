use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// Ordered list of distinct variable names.
///
/// The order fixes the lexicographic monomial order: the first variable is
/// the most significant.
#[derive(Clone, Eq, Hash)]
pub struct VarContext(Arc<[String]>);

impl VarContext {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        for (i, a) in names.iter().enumerate() {
            if a.is_empty() || names[..i].contains(a) {
                return Err(Error::InvalidInput(alloc::format!("bad variable list entry {a:?}")));
            }
        }
        Ok(VarContext(names.into()))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn name(&self, i: usize) -> &str {
        &self.0[i]
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.0
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    /// Context with `name` appended. Fails if the name is taken.
    pub fn with_var(&self, name: &str) -> Result<Self> {
        let mut names: Vec<String> = self.0.to_vec();
        names.push(name.to_string());
        VarContext::new(&names)
    }

    /// A name not used by this context, derived from `base`.
    pub fn fresh_name(&self, base: &str) -> String {
        if !self.0.iter().any(|n| n == base) {
            return base.to_string();
        }
        (1..)
            .map(|i| alloc::format!("{base}{i}"))
            .find(|c| !self.0.iter().any(|n| n == c))
            .unwrap()
    }
}

impl PartialEq for VarContext {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl fmt::Debug for VarContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicates() {
        assert!(VarContext::new(&["x", "x"]).is_err());
        let c = VarContext::new(&["x", "y"]).unwrap();
        assert_eq!(c.index_of("y").unwrap(), 1);
        assert_eq!(c.index_of("z"), Err(Error::UnknownVariable("z".into())));
        assert_eq!(c.fresh_name("y"), "y1");
        assert_eq!(c.fresh_name("t"), "t");
        assert_eq!(c.with_var("t").unwrap().len(), 3);
    }
}
