use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use super::ast::{Constant, Formula};
use crate::weight::{hom_dot, Weight};

/// Atom bindings.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Environment(BTreeMap<String, Weight>);

impl Environment {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn bind(&mut self, name: &str, w: Weight) -> &mut Self {
        self.0.insert(String::from(name), w);
        self
    }

    pub fn with(mut self, name: &str, w: Weight) -> Self {
        self.bind(name, w);
        self
    }

    pub fn get(&self, name: &str) -> Option<&Weight> {
        self.0.get(name)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &Weight)> {
        self.0.iter().map(|(k, v)| (k.as_str(), v))
    }
}

impl FromIterator<(String, Weight)> for Environment {
    fn from_iter<I: IntoIterator<Item = (String, Weight)>>(iter: I) -> Self {
        Environment(iter.into_iter().collect())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum EvalError {
    #[error("unbound atom `{0}`")]
    Unbound(String),
}

/// Interprets a formula in `([0, inf], >=, ·, 1)`: tensor is `·`, par is
/// `•`, `A -o B` is `⟦B⟧ / ⟦A⟧`, dual is the reciprocal, with is `max`, plus
/// is `min`, `1 = bot = 1`, `top = 0`, `0 = inf`.
pub fn eval(f: &Formula, env: &Environment) -> Result<Weight, EvalError> {
    Ok(match f {
        Formula::Atom(name) => env.get(name).cloned().ok_or_else(|| EvalError::Unbound(name.clone()))?,
        Formula::Const(Constant::One | Constant::Bottom) => Weight::one(),
        Formula::Const(Constant::Top) => Weight::zero(),
        Formula::Const(Constant::Zero) => Weight::infinity(),
        Formula::Dual(a) => eval(a, env)?.inv(),
        Formula::Tensor(a, b) => &eval(a, env)? * &eval(b, env)?,
        Formula::Par(a, b) => eval(a, env)?.bullet(&eval(b, env)?),
        Formula::Lollipop(a, b) => hom_dot(&eval(a, env)?, &eval(b, env)?),
        Formula::With(a, b) => eval(a, env)?.join(&eval(b, env)?),
        Formula::Plus(a, b) => eval(a, env)?.meet(&eval(b, env)?),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Validity {
    Valid,
    Counterexample { env: Environment, value: Weight },
}

impl Validity {
    pub fn is_valid(&self) -> bool {
        matches!(self, Validity::Valid)
    }
}

/// Model validity: `⟦f⟧ <= 1`, i.e. an arrow `1 -> ⟦f⟧`, in every supplied
/// environment. Returns the first failing environment otherwise.
///
/// The model is sound but not complete for MALL, so `Valid` here does not
/// mean provable.
pub fn valid<'a, I>(f: &Formula, envs: I) -> Result<Validity, EvalError>
where
    I: IntoIterator<Item = &'a Environment>,
{
    let one = Weight::one();
    for env in envs {
        let value = eval(f, env)?;
        if value > one {
            return Ok(Validity::Counterexample { env: env.clone(), value });
        }
    }
    Ok(Validity::Valid)
}

/// Every assignment of grid weights to `atoms`, in lexicographic grid order.
pub fn grid_environments<'a, I>(atoms: I) -> Vec<Environment>
where
    I: IntoIterator<Item = &'a str>,
{
    extend_environments(&Environment::new(), atoms, &Weight::grid())
}

/// Every extension of `base` assigning one of `values` to each of `atoms`.
pub fn extend_environments<'a, I>(base: &Environment, atoms: I, values: &[Weight]) -> Vec<Environment>
where
    I: IntoIterator<Item = &'a str>,
{
    let mut envs = alloc::vec![base.clone()];
    for atom in atoms {
        envs = envs.iter().flat_map(|e| values.iter().map(move |w| e.clone().with(atom, w.clone()))).collect();
    }
    envs
}

/// Validity over the full grid for every atom of `f`.
pub fn valid_on_grid(f: &Formula) -> Validity {
    let envs = grid_environments(f.atoms());
    valid(f, &envs).expect("grid environments bind every atom")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linlog::parse;

    fn ev(text: &str, env: &Environment) -> Weight {
        eval(&parse(text).unwrap(), env).unwrap()
    }

    #[test]
    fn eval_examples() {
        let at0 = Environment::new().with("x", Weight::zero());
        assert_eq!(ev("x -o x", &at0), Weight::zero());
        assert_eq!(ev("x @ x^", &at0), Weight::zero());
        assert_eq!(ev("x * x^", &at0), Weight::infinity());
        assert_eq!(ev("1 -o 1", &Environment::new()), Weight::one());
        assert_eq!(ev("1^", &Environment::new()), Weight::one());
        assert_eq!(ev("top & 0", &Environment::new()), Weight::infinity());
        assert_eq!(ev("top (+) 0", &Environment::new()), Weight::zero());
    }

    #[test]
    fn unbound_atom_is_named() {
        let err = eval(&parse("x * y").unwrap(), &Environment::new().with("x", Weight::one()));
        assert_eq!(err, Err(EvalError::Unbound(String::from("y"))));
    }

    #[test]
    fn validity_examples() {
        assert!(valid_on_grid(&parse("x -o x").unwrap()).is_valid());
        assert!(valid_on_grid(&parse("x @ x^").unwrap()).is_valid());
        match valid_on_grid(&parse("x * x^").unwrap()) {
            Validity::Counterexample { env, value } => {
                assert_eq!(env.get("x"), Some(&Weight::zero()));
                assert_eq!(value, Weight::infinity());
            }
            Validity::Valid => panic!("x * x^ must be refuted"),
        }
    }

    #[test]
    fn grid_environment_count() {
        assert_eq!(grid_environments(["a", "b"]).len(), 64);
        assert_eq!(grid_environments([]).len(), 1);
    }
}
