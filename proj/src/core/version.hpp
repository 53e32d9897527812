#ifndef SPINPAIR_VERSION_HPP
#define SPINPAIR_VERSION_HPP

#define SPINPAIR_VERSION_STRING "0.1.0"

#endif
