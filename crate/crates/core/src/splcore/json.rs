//! Wire forms. Pairs are emitted in canonical order so output is byte-stable.

use serde::{Deserialize, Serialize};

use super::{BinRel, Node, SplError, SplitRelation, Tag};

/// `["s", 3]` or `["t", 0]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeJson(pub String, pub usize);

impl From<Node> for NodeJson {
    fn from(x: Node) -> Self {
        let tag = match x.tag {
            Tag::Src => "s",
            Tag::Tgt => "t",
        };
        NodeJson(tag.to_string(), x.pos)
    }
}

impl TryFrom<&NodeJson> for Node {
    type Error = String;

    fn try_from(j: &NodeJson) -> Result<Self, String> {
        match j.0.as_str() {
            "s" => Ok(Node::src(j.1)),
            "t" => Ok(Node::tgt(j.1)),
            other => Err(format!("unknown node tag {other:?}")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitRelationJson {
    pub n: usize,
    pub m: usize,
    pub pairs: Vec<(NodeJson, NodeJson)>,
}

impl From<&SplitRelation> for SplitRelationJson {
    fn from(r: &SplitRelation) -> Self {
        SplitRelationJson {
            n: r.n(),
            m: r.m(),
            pairs: r.pairs().map(|(x, y)| (x.into(), y.into())).collect(),
        }
    }
}

impl TryFrom<&SplitRelationJson> for SplitRelation {
    type Error = String;

    fn try_from(j: &SplitRelationJson) -> Result<Self, String> {
        let mut r = SplitRelation::empty(j.n, j.m);
        for (x, y) in &j.pairs {
            r.insert(x.try_into()?, y.try_into()?)
                .map_err(|e: SplError| e.to_string())?;
        }
        Ok(r)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BinRelJson {
    pub n: usize,
    pub m: usize,
    pub pairs: Vec<(usize, usize)>,
}

impl From<&BinRel> for BinRelJson {
    fn from(r: &BinRel) -> Self {
        BinRelJson {
            n: r.n(),
            m: r.m(),
            pairs: r.pairs().collect(),
        }
    }
}

impl TryFrom<&BinRelJson> for BinRel {
    type Error = String;

    fn try_from(j: &BinRelJson) -> Result<Self, String> {
        BinRel::from_pairs(j.n, j.m, j.pairs.iter().copied()).map_err(|e| e.to_string())
    }
}

impl SplitRelation {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&SplitRelationJson::from(self)).expect("plain data serializes")
    }
}

impl BinRel {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&BinRelJson::from(self)).expect("plain data serializes")
    }
}
