#include "ncd/parallel.hpp"

#include <cstdlib>
#include <string>

namespace ncd {

unsigned thread_count()
{
	if (const char* env = std::getenv("NCD_THREADS")) {
		try {
			int v = std::stoi(env);
			if (v > 0)
				return static_cast<unsigned>(v);
		} catch (const std::exception&) {
		}
	}
	unsigned hw = std::thread::hardware_concurrency();
	return hw ? hw : 1;
}

} // namespace ncd
