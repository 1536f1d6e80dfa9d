use std::fmt;

pub const OK: u8 = 0;
pub const FAILED: u8 = 1;
pub const BAD_INPUT: u8 = 2;
pub const BUDGET: u8 = 3;

/// An error that should end the process with a specific status.
#[derive(Debug)]
pub struct Fail {
    pub code: u8,
    pub msg: String,
}

impl fmt::Display for Fail {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.msg)
    }
}

impl std::error::Error for Fail {}

pub fn bad_input(msg: impl Into<String>) -> anyhow::Error {
    Fail {
        code: BAD_INPUT,
        msg: msg.into(),
    }
    .into()
}

pub fn failed(msg: impl Into<String>) -> anyhow::Error {
    Fail {
        code: FAILED,
        msg: msg.into(),
    }
    .into()
}

pub fn exit_code(e: &anyhow::Error) -> u8 {
    if let Some(f) = e.downcast_ref::<Fail>() {
        return f.code;
    }
    if e.downcast_ref::<ramseylab::format::ParseError>().is_some() {
        return BAD_INPUT;
    }
    match e.downcast_ref::<ramseylab::Error>() {
        Some(ramseylab::Error::UnknownPattern(_) | ramseylab::Error::UnknownCertificate(_)) => {
            BAD_INPUT
        }
        _ => FAILED,
    }
}
