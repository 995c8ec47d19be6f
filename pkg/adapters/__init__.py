# Paquete de adaptadores
