use thiserror::Error;

/// Errors raised by kernel constructions and predicates.
///
/// Degenerate input is always an error, never a sentinel value: callers that
/// want to probe a configuration (e.g. "are these lines parallel?") should use
/// the projective predicates instead of catching errors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeomError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("homogeneous triple is identically zero")]
    ZeroTriple,
    #[error("coincident points have no unique join")]
    CoincidentPoints,
    #[error("coincident lines have no unique meet")]
    CoincidentLines,
    #[error("point does not lie on the line")]
    NotOnLine,
    #[error("points are not collinear")]
    NotCollinear,
    #[error("harmonic conjugate undefined: reference point coincides with an endpoint")]
    DegenerateHarmonic,
    #[error("point at infinity where a finite point is required")]
    AtInfinity,
    #[error("collinear points do not determine a circle")]
    CollinearPoints,
    #[error("not a real circle (radius squared must be positive)")]
    NotARealCircle,
    #[error("concentric circles have no radical axis")]
    Concentric,
    #[error("circle centers are collinear; no radical center")]
    CollinearCenters,
    #[error("radical center is not unique (coaxial circles share a common secant)")]
    NonUnique,
    #[error("point does not lie on the circle")]
    NotOnCircle,
    #[error("line is not incident with the point")]
    NotIncident,
    #[error("degenerate triangle")]
    Degenerate,
    #[error("identity is not applicable to this triangle")]
    NotApplicable,
    #[error("barycentric masses sum to zero: the point is at infinity")]
    PointAtInfinity,
    #[error("point lies on a side line of the triangle")]
    OnSideLine,
    #[error("point coincides with a vertex")]
    AtVertex,
    #[error("line passes through a vertex")]
    ThroughVertex,
    #[error("construction is not defined for this triangle")]
    NotDefined,
    #[error("derived triangle is degenerate")]
    DegenerateDerived,
    #[error("equi-Brocard circle degenerates (equilateral triangle)")]
    DegenerateNeuberg,
    #[error("corresponding vertices coincide")]
    SharedVertex,
    #[error("corresponding side lines coincide")]
    SharedSideLine,
    #[error("vanishing signed area in the perspectivity criterion")]
    DegenerateArea,
    #[error("the pair of triangles is not perspective")]
    NotHomologicalPair,
    #[error("cross-meet of the pair is undefined")]
    DegenerateVeronese,
    #[error("point coincides with the inversion pole")]
    AtPole,
    #[error("point coincides with the circle center")]
    AtCenter,
    #[error("line passes through the circle center (pole at infinity)")]
    ThroughCenter,
    #[error("scene element {0:?} is incident with the reference circle's center")]
    CenterIncident(String),
    #[error("scene element {0:?} is not supported by this transform")]
    UnsupportedElement(String),
    #[error("scene is empty")]
    EmptyScene,
    #[error("duplicate scene element name {0:?}")]
    DuplicateName(String),
    #[error("unknown scene element {0:?}")]
    UnknownElement(String),
    #[error("mixed scalar backends: {0}")]
    BackendMismatch(&'static str),
    #[error("square root of a negative quantity")]
    NegativeSqrt,
}

pub type Result<T> = std::result::Result<T, GeomError>;
