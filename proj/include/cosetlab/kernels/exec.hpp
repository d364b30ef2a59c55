#pragma once

#include <cstdint>
#include <string>

namespace cosetlab::kernels {

// Serial paths are the reference implementations; parallel paths must give
// identical results.
enum class Exec { serial, parallel };

void set_threads(int n);  // n <= 0 keeps the OpenMP default
int max_threads();
std::string to_string(Exec e);

}  // namespace cosetlab::kernels

#include <exception>
#include <mutex>

namespace cosetlab::kernels {

// Keeps the exception from the lowest failing index of a parallel loop so the
// rethrown error does not depend on scheduling.
class ErrorSlot {
public:
    template <class F>
    void run(std::int64_t index, F&& f) noexcept {
        try {
            f();
        } catch (...) {
            std::lock_guard lk(mu_);
            if (!err_ || index < index_) {
                err_ = std::current_exception();
                index_ = index;
            }
        }
    }
    void rethrow() const {
        if (err_) std::rethrow_exception(err_);
    }

private:
    std::mutex mu_;
    std::exception_ptr err_;
    std::int64_t index_ = 0;
};

}  // namespace cosetlab::kernels
