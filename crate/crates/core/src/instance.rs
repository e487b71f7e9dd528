//! Problem instance files: one or two matroids plus the block count k.

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::matroid::{Matroid, MatroidSchema};
use crate::partition_common::CommonInstance;

/// On-disk instance format: `{"matroids":[...], "k":<int>}`; k is optional
/// when the caller passes it separately.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceSchema {
    pub matroids: Vec<MatroidSchema>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
}

/// A parsed instance.
#[derive(Debug, Clone)]
pub struct Instance {
    pub matroids: Vec<Matroid>,
    pub k: Option<u32>,
}

impl Instance {
    pub fn parse(text: &str) -> Result<Self, Error> {
        let schema: InstanceSchema =
            serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))?;
        if schema.matroids.is_empty() || schema.matroids.len() > 2 {
            return Err(Error::MatroidCount { expected: 2, got: schema.matroids.len() });
        }
        if schema.k == Some(0) {
            return Err(Error::InvalidK);
        }
        let matroids = schema
            .matroids
            .iter()
            .map(|m| m.build())
            .collect::<Result<Vec<_>, _>>()?;
        if matroids.len() == 2 && matroids[0].n() != matroids[1].n() {
            return Err(Error::GroundSetMismatch(matroids[0].n(), matroids[1].n()));
        }
        Ok(Instance { matroids, k: schema.k })
    }

    /// Effective k: an explicit override wins over the file value.
    pub fn k_or(&self, flag: Option<u32>) -> Result<u32, Error> {
        match flag.or(self.k) {
            None => Err(Error::MissingK),
            Some(0) => Err(Error::InvalidK),
            Some(k) => Ok(k),
        }
    }

    /// The single matroid of a one-matroid instance.
    pub fn single(&self) -> Result<&Matroid, Error> {
        match self.matroids.as_slice() {
            [m] => Ok(m),
            other => Err(Error::MatroidCount { expected: 1, got: other.len() }),
        }
    }

    /// Both matroids of a two-matroid instance, as a common instance.
    pub fn common(&self, k: u32) -> Result<CommonInstance, Error> {
        match self.matroids.as_slice() {
            [a, b] => CommonInstance::new(a.clone(), b.clone(), k),
            other => Err(Error::MatroidCount { expected: 2, got: other.len() }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_one_and_two_matroid_instances() {
        let one = Instance::parse(r#"{"matroids":[{"type":"uniform","n":4,"r":2}],"k":2}"#)
            .unwrap();
        assert_eq!(one.matroids.len(), 1);
        assert_eq!(one.k_or(None).unwrap(), 2);
        assert_eq!(one.k_or(Some(3)).unwrap(), 3);
        assert!(one.single().is_ok());
        assert!(one.common(2).is_err());

        let two = Instance::parse(
            r#"{"matroids":[
                {"type":"partition","n":4,"blocks":[[0,1],[2,3]],"caps":[1,1]},
                {"type":"partition","n":4,"blocks":[[0,2],[1,3]],"caps":[1,1]}
            ],"k":2}"#,
        )
        .unwrap();
        assert!(two.common(2).is_ok());
        assert!(two.single().is_err());
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            Instance::parse(r#"{"matroids":[]}"#),
            Err(Error::MatroidCount { .. })
        ));
        assert!(matches!(
            Instance::parse(r#"{"matroids":[{"type":"uniform","n":4,"r":2}],"k":0}"#),
            Err(Error::InvalidK)
        ));
        assert!(matches!(
            Instance::parse(
                r#"{"matroids":[{"type":"uniform","n":4,"r":2},{"type":"uniform","n":3,"r":1}]}"#
            ),
            Err(Error::GroundSetMismatch(4, 3))
        ));
        let no_k =
            Instance::parse(r#"{"matroids":[{"type":"uniform","n":4,"r":2}]}"#).unwrap();
        assert!(matches!(no_k.k_or(None), Err(Error::MissingK)));
    }
}
