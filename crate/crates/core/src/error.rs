use thiserror::Error;

use crate::report::Report;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("map is not idempotent")]
    NotIdempotent,
    #[error("map is not invertible: {0}")]
    NotInvertible(String),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("minimal polynomial is not irreducible: {0}")]
    NotIrreducible(String),
    #[error("axiom check failed for {}", .0.subject)]
    AxiomFailure(Box<Report>),
    #[error("map is not an algebra morphism")]
    NotAlgebraMorphism(Box<Report>),
    #[error("object is not a crossed module")]
    NotCrossed(Box<Report>),
    #[error("object is not a Hopf bimodule")]
    NotHopfBimodule(Box<Report>),
    #[error("antipode has not been inverted")]
    AntipodeNotInverted,
    #[error("no antipode available")]
    NoAntipode,
    #[error("module is not in the category O of the quasitriangular structure")]
    NotInCategoryO(Box<Report>),
    #[error("quasitriangular axioms fail")]
    NotQuasitriangular(Box<Report>),
    #[error("not a module algebra")]
    NotModuleAlgebra(Box<Report>),
    #[error("not a comodule coalgebra")]
    NotComoduleCoalgebra(Box<Report>),
    #[error("not a bialgebra projection")]
    NotProjection(Box<Report>),
    #[error("not a bialgebra in the category of Hopf bimodules")]
    NotBialgebraInCategory(Box<Report>),
    #[error("missing braiding block ({0}, {1})")]
    MissingBlock(usize, usize),
    #[error("not a permutation: {0:?}")]
    NotPermutation(Vec<usize>),
    #[error("degree {degree} exceeds the enumeration bound {bound}")]
    DegreeTooLarge { degree: usize, bound: usize },
    #[error("map is not a bialgebra morphism")]
    NotBialgebraMorphism(Box<Report>),
    #[error("constraint system has no solution")]
    NoSolution,
    #[error("constraint system has a {0}-dimensional solution space")]
    NonUniqueSolution(usize),
    #[error("graded bialgebra is not generated in degrees 0 and 1 (degree {0})")]
    NotGenerated(usize),
    #[error("degree-(0,1) maps are not a bialgebra morphism")]
    NotTruncatedMorphism(Box<Report>),
    #[error("map does not factor through the multiplication in degree {0}")]
    FactorizationObstruction(usize),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Stable identifier used in reports.
    pub fn name(&self) -> &'static str {
        match self {
            Error::ShapeMismatch(_) => "ShapeMismatch",
            Error::NotIdempotent => "NotIdempotent",
            Error::NotInvertible(_) => "NotInvertible",
            Error::BadParams(_) => "BadParams",
            Error::NotIrreducible(_) => "NotIrreducible",
            Error::AxiomFailure(_) => "AxiomFailure",
            Error::NotAlgebraMorphism(_) => "NotAlgebraMorphism",
            Error::NotCrossed(_) => "NotCrossed",
            Error::NotHopfBimodule(_) => "NotHopfBimodule",
            Error::AntipodeNotInverted => "AntipodeNotInverted",
            Error::NoAntipode => "NoAntipode",
            Error::NotInCategoryO(_) => "NotInCategoryO",
            Error::NotQuasitriangular(_) => "NotQuasitriangular",
            Error::NotModuleAlgebra(_) => "NotModuleAlgebra",
            Error::NotComoduleCoalgebra(_) => "NotComoduleCoalgebra",
            Error::NotProjection(_) => "NotProjection",
            Error::NotBialgebraInCategory(_) => "NotBialgebraInCategory",
            Error::MissingBlock(..) => "MissingBlock",
            Error::NotPermutation(_) => "NotPermutation",
            Error::DegreeTooLarge { .. } => "DegreeTooLarge",
            Error::NotBialgebraMorphism(_) => "NotBialgebraMorphism",
            Error::NoSolution => "NoSolution",
            Error::NonUniqueSolution(_) => "NonUniqueSolution",
            Error::NotGenerated(_) => "NotGenerated",
            Error::NotTruncatedMorphism(_) => "NotTruncatedMorphism",
            Error::FactorizationObstruction(_) => "FactorizationObstruction",
            Error::Parse(_) => "ParseError",
        }
    }

    /// The failing report carried by checker errors.
    pub fn report(&self) -> Option<&Report> {
        match self {
            Error::AxiomFailure(r)
            | Error::NotAlgebraMorphism(r)
            | Error::NotCrossed(r)
            | Error::NotHopfBimodule(r)
            | Error::NotInCategoryO(r)
            | Error::NotQuasitriangular(r)
            | Error::NotModuleAlgebra(r)
            | Error::NotComoduleCoalgebra(r)
            | Error::NotProjection(r)
            | Error::NotBialgebraInCategory(r)
            | Error::NotBialgebraMorphism(r)
            | Error::NotTruncatedMorphism(r) => Some(r),
            _ => None,
        }
    }
}
