//! Indexed binary min-heap with decrease-key.

use std::cmp::Ordering;

const ABSENT: u32 = u32::MAX;

/// Min-priority queue over keys `0..capacity`, at most one entry per key.
///
/// Equal priorities are broken by the smaller key, so the dequeue order is a
/// pure function of the operation sequence.
///
/// Misuse (enqueueing a present key, updating an absent key, or raising a
/// priority) is a caller bug and panics.
#[derive(Debug, Clone)]
pub struct IndexedMinQueue<P> {
    heap: Vec<(usize, P)>,
    position: Vec<u32>,
}

impl<P: PartialOrd + Copy> IndexedMinQueue<P> {
    pub fn with_capacity(capacity: usize) -> Self {
        assert!(
            capacity < ABSENT as usize,
            "queue capacity {capacity} too large"
        );
        IndexedMinQueue {
            heap: Vec::new(),
            position: vec![ABSENT; capacity],
        }
    }

    pub fn len(&self) -> usize {
        self.heap.len()
    }

    pub fn is_empty(&self) -> bool {
        self.heap.is_empty()
    }

    pub fn contains(&self, key: usize) -> bool {
        self.position[key] != ABSENT
    }

    /// Current priority of `key`, if enqueued.
    pub fn priority(&self, key: usize) -> Option<P> {
        match self.position[key] {
            ABSENT => None,
            slot => Some(self.heap[slot as usize].1),
        }
    }

    pub fn peek(&self) -> Option<(usize, P)> {
        self.heap.first().copied()
    }

    pub fn enqueue(&mut self, key: usize, priority: P) {
        assert!(!self.contains(key), "key {key} is already enqueued");
        let slot = self.heap.len();
        self.heap.push((key, priority));
        self.position[key] = slot as u32;
        self.sift_up(slot);
    }

    /// Removes and returns a minimal entry, `None` when empty.
    pub fn dequeue_min(&mut self) -> Option<(usize, P)> {
        let last = self.heap.len().checked_sub(1)?;
        self.swap(0, last);
        let top = self.heap.pop().expect("nonempty");
        self.position[top.0] = ABSENT;
        if !self.heap.is_empty() {
            self.sift_down(0);
        }
        Some(top)
    }

    /// Lowers the priority of an enqueued key.
    pub fn update(&mut self, key: usize, priority: P) {
        let slot = self.position[key];
        assert!(slot != ABSENT, "key {key} is not enqueued");
        let slot = slot as usize;
        assert!(
            priority < self.heap[slot].1,
            "update of key {key} must strictly decrease its priority"
        );
        self.heap[slot].1 = priority;
        self.sift_up(slot);
    }

    #[inline]
    fn less(&self, a: usize, b: usize) -> bool {
        let (ka, pa) = self.heap[a];
        let (kb, pb) = self.heap[b];
        match pa.partial_cmp(&pb) {
            Some(Ordering::Less) => true,
            Some(Ordering::Equal) => ka < kb,
            _ => false,
        }
    }

    fn swap(&mut self, a: usize, b: usize) {
        self.heap.swap(a, b);
        self.position[self.heap[a].0] = a as u32;
        self.position[self.heap[b].0] = b as u32;
    }

    fn sift_up(&mut self, mut slot: usize) {
        while slot > 0 {
            let parent = (slot - 1) / 2;
            if !self.less(slot, parent) {
                break;
            }
            self.swap(slot, parent);
            slot = parent;
        }
    }

    fn sift_down(&mut self, mut slot: usize) {
        let len = self.heap.len();
        loop {
            let left = 2 * slot + 1;
            if left >= len {
                break;
            }
            let right = left + 1;
            let child = if right < len && self.less(right, left) {
                right
            } else {
                left
            };
            if !self.less(child, slot) {
                break;
            }
            self.swap(slot, child);
            slot = child;
        }
    }
}
