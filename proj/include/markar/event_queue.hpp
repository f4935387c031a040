#pragma once

#include <array>
#include <atomic>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "markar/errors.hpp"
#include "markar/input_event.hpp"

namespace markar {

// Bounded lock-free ring for exactly one producer thread (UI / network reader)
// and one consumer thread (frame loop). push() never blocks; it throws
// QueueFull when the consumer has fallen `Capacity` events behind.
template <typename T, std::size_t Capacity>
class SpscQueue {
public:
    void push(const T& item) {
        const std::size_t tail = tail_.load(std::memory_order_relaxed);
        if (tail - head_.load(std::memory_order_acquire) >= Capacity) throw QueueFull();
        slots_[tail % Capacity] = item;
        tail_.store(tail + 1, std::memory_order_release);
    }

    std::optional<T> pop() {
        const std::size_t head = head_.load(std::memory_order_relaxed);
        if (head == tail_.load(std::memory_order_acquire)) return std::nullopt;
        T item = slots_[head % Capacity];
        head_.store(head + 1, std::memory_order_release);
        return item;
    }

    // Everything currently queued, oldest first.
    std::vector<T> drain() {
        std::vector<T> out;
        while (auto item = pop()) out.push_back(std::move(*item));
        return out;
    }

    std::size_t size() const {
        return tail_.load(std::memory_order_acquire) - head_.load(std::memory_order_acquire);
    }
    static constexpr std::size_t capacity() { return Capacity; }

private:
    std::array<T, Capacity> slots_{};
    alignas(64) std::atomic<std::size_t> head_{0};
    alignas(64) std::atomic<std::size_t> tail_{0};
};

inline constexpr std::size_t kEventQueueCapacity = 1024;
using EventQueue = SpscQueue<InputEvent, kEventQueueCapacity>;

}  // namespace markar
