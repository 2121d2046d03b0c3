use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("covectors {0} and {1} are proportional")]
    ProportionalCovectors(usize, usize),
    #[error("covectors span a subspace of rank {found}, expected {expected}")]
    CovectorsDoNotSpan { found: usize, expected: usize },
    #[error("covector {0} is zero")]
    ZeroCovector(usize),
    #[error("invalid root system: {0}")]
    InvalidRootSystem(String),
    #[error("point lies on hyperplane {0}")]
    PointOnHyperplane(String),
    #[error("path lies identically on hyperplane {0}")]
    PathOnHyperplane(String),
    #[error("empty subset")]
    EmptySubset,
    #[error("subset is not connected in the Coxeter graph")]
    DisconnectedSubset,
    #[error("graph is not connected")]
    DisconnectedGraph,
    #[error("rank {0} too large for group enumeration (max 4)")]
    RankTooLarge(usize),
    #[error("{0}")]
    SizeGuard(String),
    #[error("nested set is not maximal")]
    NotMaximal,
    #[error("the full covector set must be a member of the nested set")]
    FullFlatMissing,
    #[error("no root with full support over the adapted basis inside flat {0}")]
    NoFullSupportRoot(String),
    #[error("indices do not form a basis")]
    NotABasis,
    #[error("model point has no value for flat {0}")]
    MissingFlatValue(String),
    #[error("point is outside the chart domain: {0}")]
    OutsideChart(String),
    #[error("subspace is not in the chart's coordinate domain: {0}")]
    NotInChartCoordinates(String),
    #[error("generic rank smaller than the number of rows")]
    RankDeficient,
    #[error("not the five-covector counterexample arrangement")]
    WrongArrangement,
    #[error("unknown component {0}")]
    UnknownComponent(String),
    #[error("invalid family point: {0}")]
    InvalidFamilyPoint(String),
    #[error("invalid nested-set member: {0}")]
    InvalidNestedMember(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
