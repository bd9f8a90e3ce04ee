#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace ncd {

/// Worker count: NCD_THREADS when set to a positive integer, else the
/// hardware concurrency.
unsigned thread_count();

/// Evaluates fn(i) for i in [0, n) on a small pool. Results land at their
/// index, so the output never depends on scheduling. The first exception
/// thrown by any task is rethrown after every worker has stopped.
template <class T, class Fn>
std::vector<T> parallel_map(std::size_t n, Fn&& fn)
{
	std::vector<T> out(n);
	const std::size_t workers = std::min<std::size_t>(thread_count(), n);
	if (workers <= 1) {
		for (std::size_t i = 0; i < n; ++i)
			out[i] = fn(i);
		return out;
	}
	std::atomic<std::size_t> next{0};
	std::exception_ptr error;
	std::mutex error_mutex;
	auto work = [&] {
		for (std::size_t i; (i = next.fetch_add(1)) < n;) {
			try {
				out[i] = fn(i);
			} catch (...) {
				std::lock_guard lock(error_mutex);
				if (!error)
					error = std::current_exception();
				next = n;
			}
		}
	};
	std::vector<std::thread> pool;
	for (std::size_t t = 0; t < workers; ++t)
		pool.emplace_back(work);
	for (auto& t : pool)
		t.join();
	if (error)
		std::rethrow_exception(error);
	return out;
}

} // namespace ncd
