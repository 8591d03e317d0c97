//! Sliding-window request accounting for the GeoNames free tier.

use std::collections::VecDeque;
use std::sync::Mutex;
use std::time::{Duration, Instant};

pub const HOUR: Duration = Duration::from_secs(3600);
pub const DAY: Duration = Duration::from_secs(86_400);

/// Time source. Tests substitute [`SimulatedClock`] so waits cost nothing.
pub trait Clock: Send + Sync {
    /// Time elapsed since an arbitrary fixed origin.
    fn now(&self) -> Duration;
    fn sleep(&self, duration: Duration);
}

#[derive(Debug)]
pub struct SystemClock {
    origin: Instant,
}

impl SystemClock {
    pub fn new() -> Self {
        SystemClock {
            origin: Instant::now(),
        }
    }
}

impl Default for SystemClock {
    fn default() -> Self {
        Self::new()
    }
}

impl Clock for SystemClock {
    fn now(&self) -> Duration {
        self.origin.elapsed()
    }

    fn sleep(&self, duration: Duration) {
        std::thread::sleep(duration);
    }
}

/// A clock that only moves when slept on or advanced. Every sleep is logged.
#[derive(Debug, Default)]
pub struct SimulatedClock {
    state: Mutex<(Duration, Vec<Duration>)>,
}

impl SimulatedClock {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn advance(&self, by: Duration) {
        self.state.lock().unwrap().0 += by;
    }

    pub fn sleeps(&self) -> Vec<Duration> {
        self.state.lock().unwrap().1.clone()
    }
}

impl Clock for SimulatedClock {
    fn now(&self) -> Duration {
        self.state.lock().unwrap().0
    }

    fn sleep(&self, duration: Duration) {
        let mut state = self.state.lock().unwrap();
        state.0 += duration;
        state.1.push(duration);
    }
}

/// Proof that one request may be issued.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Permit {
    pub issued_at: Duration,
    pub waited: Duration,
}

/// Keeps the trailing-hour and trailing-day request counts within budget.
/// A request issued at `t` counts against windows ending before
/// `t + HOUR` (resp. `t + DAY`).
#[derive(Debug, Clone)]
pub struct QuotaLimiter {
    hourly_budget: usize,
    daily_budget: usize,
    issued: VecDeque<Duration>,
}

impl QuotaLimiter {
    pub fn new(hourly_budget: u32, daily_budget: u32) -> Self {
        assert!(hourly_budget > 0 && daily_budget > 0, "budgets must be positive");
        QuotaLimiter {
            hourly_budget: hourly_budget as usize,
            daily_budget: daily_budget as usize,
            issued: VecDeque::new(),
        }
    }

    fn prune(&mut self, now: Duration) {
        while self.issued.front().is_some_and(|&t| t + DAY <= now) {
            self.issued.pop_front();
        }
    }

    /// How long the caller must wait before one more request fits.
    pub fn required_wait(&mut self, now: Duration) -> Duration {
        self.prune(now);
        let window_wait = |issued: &VecDeque<Duration>, window: Duration, budget: usize| {
            let first_in = issued.partition_point(|&t| t + window <= now);
            let in_window = issued.len() - first_in;
            if in_window < budget {
                Duration::ZERO
            } else {
                // The oldest `in_window - budget + 1` entries have to age out.
                let release = issued[first_in + in_window - budget];
                (release + window).saturating_sub(now)
            }
        };
        window_wait(&self.issued, HOUR, self.hourly_budget)
            .max(window_wait(&self.issued, DAY, self.daily_budget))
    }

    /// Blocks on `clock` until a request fits, then records it.
    pub fn acquire(&mut self, clock: &dyn Clock) -> Permit {
        let start = clock.now();
        loop {
            let now = clock.now();
            let wait = self.required_wait(now);
            if wait.is_zero() {
                self.issued.push_back(now);
                return Permit {
                    issued_at: now,
                    waited: now.saturating_sub(start),
                };
            }
            clock.sleep(wait);
        }
    }

    pub fn issued_in_last_hour(&self, now: Duration) -> usize {
        self.issued.iter().filter(|&&t| t + HOUR > now && t <= now).count()
    }
}
