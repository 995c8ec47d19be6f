# Adaptadores de salida - servicios externos
