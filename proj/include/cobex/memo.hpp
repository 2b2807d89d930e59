#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <utility>

namespace cobex {

/// Read-mostly memo attached to a Complex. Values are computed at most once
/// per key; concurrent readers take a shared lock, a missing entry is
/// computed under the exclusive lock.
class MemoBox {
public:
    template <class T, class Fn>
    std::shared_ptr<const T> get_or_compute(int key, Fn&& compute) const {
        {
            std::shared_lock lock(mutex_);
            auto it = slots_.find(key);
            if (it != slots_.end()) return std::static_pointer_cast<const T>(it->second);
        }
        std::unique_lock lock(mutex_);
        auto it = slots_.find(key);
        if (it != slots_.end()) return std::static_pointer_cast<const T>(it->second);
        auto value = std::make_shared<const T>(compute());
        slots_.emplace(key, value);
        return value;
    }

private:
    mutable std::shared_mutex mutex_;
    mutable std::map<int, std::shared_ptr<const void>> slots_;
};

}  // namespace cobex
