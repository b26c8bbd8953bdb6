from .tower import CatalogSerializer, TowerEntrySerializer, catalog_to_dict
