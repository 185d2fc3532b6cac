//! Incidence systems, chamber systems, thin apartment models and the Weyl
//! distance on minimal parabolics.

mod apartment;
mod chamber;
mod incidence;
mod thin;

pub use apartment::{delta_parabolic, lie_apartment, transport_frame, verify_building, BuildingReport, LieApartment};
pub use chamber::{ChamberSystem, Coresidues, Reconstruction};
pub use incidence::IncidenceSystem;
pub use thin::{apartment_model_a, apartment_model_b, Isomorphism, ThinChamberSystem, WDistance};

#[cfg(test)]
mod tests;
