#pragma once

#define CLOX_VERSION "0.1.0"
