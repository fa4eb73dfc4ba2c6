#ifndef QSL2Q_VERSION_HPP
#define QSL2Q_VERSION_HPP

namespace qsl2q {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace qsl2q

#endif  // QSL2Q_VERSION_HPP
