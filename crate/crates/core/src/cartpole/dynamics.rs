use serde::{Deserialize, Serialize};

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Variant {
    #[serde(rename = "2d")]
    TwoD,
    #[serde(rename = "2dg")]
    TwoDG,
    #[serde(rename = "3d")]
    ThreeD,
}

impl Variant {
    pub fn action_count(self) -> usize {
        match self {
            Variant::TwoD | Variant::TwoDG => 2,
            Variant::ThreeD => 4,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Variant::TwoD => "cartpole2d",
            Variant::TwoDG => "cartpole2d-g",
            Variant::ThreeD => "cartpole3d",
        }
    }
}

/// Physical constants of one cart-pole world.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CartPoleParams {
    pub gravity: f64,
    pub cart_mass: f64,
    pub pole_mass: f64,
    pub pole_half_length: f64,
    pub force_magnitude: f64,
    pub timestep: f64,
    pub position_threshold: f64,
    pub angle_threshold: f64,
    pub variant: Variant,
}

impl CartPoleParams {
    /// Classic benchmark constants; 2D-G only raises gravity to 250 m/s^2.
    pub fn standard(variant: Variant) -> Self {
        Self {
            gravity: if variant == Variant::TwoDG { 250.0 } else { 9.8 },
            cart_mass: 1.0,
            pole_mass: 0.1,
            pole_half_length: 0.5,
            force_magnitude: 10.0,
            timestep: 0.02,
            position_threshold: 2.4,
            angle_threshold: 12f64.to_radians(),
            variant,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let positive = [
            self.cart_mass,
            self.pole_mass,
            self.pole_half_length,
            self.force_magnitude,
            self.timestep,
            self.position_threshold,
            self.angle_threshold,
        ];
        if positive.iter().any(|v| !(*v > 0.0)) || !(self.gravity >= 0.0) {
            return Err(Error::InvalidParameter(
                "cart-pole physical quantities must be positive".into(),
            ));
        }
        Ok(())
    }
}

/// State of one cart moving along one axis with its pole.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct PlanarState {
    pub x: f64,
    pub x_dot: f64,
    pub theta: f64,
    pub theta_dot: f64,
}

impl PlanarState {
    pub fn mirrored(self) -> Self {
        Self {
            x: -self.x,
            x_dot: -self.x_dot,
            theta: -self.theta,
            theta_dot: -self.theta_dot,
        }
    }

    fn failed(&self, params: &CartPoleParams) -> bool {
        self.x.abs() > params.position_threshold || self.theta.abs() > params.angle_threshold
    }
}

/// 2D state, or the 3D approximation: two planar systems along x and y
/// sharing parameters. The pole's pitch follows the x axis and its roll the
/// y axis; yaw is not modeled.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum CartState {
    Planar(PlanarState),
    Spatial { x: PlanarState, y: PlanarState },
}

impl CartState {
    pub fn at_rest(variant: Variant) -> Self {
        match variant {
            Variant::ThreeD => CartState::Spatial {
                x: PlanarState::default(),
                y: PlanarState::default(),
            },
            _ => CartState::Planar(PlanarState::default()),
        }
    }

    pub fn failed(&self, params: &CartPoleParams) -> bool {
        match self {
            CartState::Planar(s) => s.failed(params),
            CartState::Spatial { x, y } => x.failed(params) || y.failed(params),
        }
    }

    /// Observation vector: `(x, x_dot, theta, theta_dot)` in 2D;
    /// `(x, y, x_dot, y_dot, pitch, roll, pitch_rate, roll_rate)` in 3D.
    pub fn features(&self) -> Vec<f64> {
        match self {
            CartState::Planar(s) => vec![s.x, s.x_dot, s.theta, s.theta_dot],
            CartState::Spatial { x, y } => vec![
                x.x, y.x, x.x_dot, y.x_dot, x.theta, y.theta, x.theta_dot, y.theta_dot,
            ],
        }
    }
}

/// Index into the variant's action set: 2D `{0: push -x, 1: push +x}`,
/// 3D additionally `{2: push -y, 3: push +y}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Action(pub usize);

impl Action {
    fn axis_and_sign(self) -> (usize, f64) {
        let sign = if self.0 % 2 == 0 { -1.0 } else { 1.0 };
        (self.0 / 2, sign)
    }
}

/// One explicit-Euler step of the planar cart-pole equations of motion
/// under horizontal force `force`.
pub fn planar_step(s: PlanarState, force: f64, p: &CartPoleParams) -> PlanarState {
    let total_mass = p.cart_mass + p.pole_mass;
    let pole_moment = p.pole_mass * p.pole_half_length;
    let (sin, cos) = s.theta.sin_cos();
    let temp = (force + pole_moment * s.theta_dot * s.theta_dot * sin) / total_mass;
    let theta_acc = (p.gravity * sin - cos * temp)
        / (p.pole_half_length * (4.0 / 3.0 - p.pole_mass * cos * cos / total_mass));
    let x_acc = temp - pole_moment * theta_acc * cos / total_mass;
    PlanarState {
        x: s.x + p.timestep * s.x_dot,
        x_dot: s.x_dot + p.timestep * x_acc,
        theta: s.theta + p.timestep * s.theta_dot,
        theta_dot: s.theta_dot + p.timestep * theta_acc,
    }
}

/// Advances the world by one tick under `action`.
pub fn step(state: CartState, action: Action, params: &CartPoleParams) -> Result<CartState> {
    let n = params.variant.action_count();
    if action.0 >= n {
        return Err(Error::InvalidAction(format!(
            "action {} outside the {n}-action set of {}",
            action.0,
            params.variant.label()
        )));
    }
    let (axis, sign) = action.axis_and_sign();
    let force = sign * params.force_magnitude;
    match state {
        CartState::Planar(s) => Ok(CartState::Planar(planar_step(s, force, params))),
        CartState::Spatial { x, y } => {
            let (fx, fy) = if axis == 0 { (force, 0.0) } else { (0.0, force) };
            Ok(CartState::Spatial {
                x: planar_step(x, fx, params),
                y: planar_step(y, fy, params),
            })
        }
    }
}
